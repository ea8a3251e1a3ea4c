//! Rational functions, truncated power series and small matrices of rational
//! functions, all over exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::matrix::IntMatrix;
use crate::poly::{content, fmt_terms, Polynomial};

/// `num / den` in lowest terms with integer coefficients of joint content 1
/// and a positive lowest-order denominator coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        // clear denominators jointly, then remove the joint content
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let scale = BigRational::from_integer(l);
        let (num, den) = (num.scale(&scale), den.scale(&scale));
        let (num, den) = (num.to_ints().expect("cleared"), den.to_ints().expect("cleared"));
        let mut c = content(&num).gcd(&content(&den));
        if den.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            c = -c;
        }
        let divide = |v: Vec<BigInt>| -> Vec<BigInt> { v.into_iter().map(|x| x / &c).collect() };
        RationalFunction { num: Polynomial::from_ints(&divide(num)), den: Polynomial::from_ints(&divide(den)) }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::canonical(p, Polynomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_polynomial(Polynomial::from_i64(&[n]))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::from_polynomial(Polynomial::from_ints(std::slice::from_ref(n)))
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    /// `z^n`.
    pub fn z_pow(n: usize) -> Self {
        Self::from_polynomial(Polynomial::monomial(BigRational::one(), n))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        Self::canonical(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::canonical(self.num.scale(k), self.den.clone())
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::canonical(self.num.mul(p), self.den.clone())
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn derivative(&self) -> Self {
        let top = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::canonical(top, self.den.mul(&self.den))
    }

    /// `f'/f`.
    pub fn log_derivative(&self) -> Result<Self, AlgebraError> {
        self.derivative().div(self)
    }

    /// Substitutes `z -> z^m`.
    pub fn compose_power(&self, m: usize) -> Self {
        Self::canonical(self.num.compose_power(m), self.den.compose_power(m))
    }

    /// Substitutes `z -> -z`.
    pub fn reflect(&self) -> Self {
        Self::canonical(self.num.reflect(), self.den.reflect())
    }

    /// Maclaurin coefficients `c_0..c_order` by long division.
    pub fn series(&self, order: usize) -> Result<PowerSeries, AlgebraError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::PoleAtOrigin);
        }
        let den = self.den.coeffs();
        let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for (i, di) in den.iter().enumerate().skip(1).take(n) {
                acc -= di * &c[n - i];
            }
            c.push(acc / &d0);
        }
        Ok(PowerSeries { coeffs: c })
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Integer coefficient arrays `(num, den)`.
    pub fn int_coeffs(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        (self.num.to_ints().expect("canonical form is integral"), self.den.to_ints().expect("canonical form is integral"))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

/// Coefficients `c_0..c_order`; results are truncated to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        PowerSeries::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PowerSeries::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Integer coefficients if all are integral.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplies by `z^n`, keeping the order.
    pub fn shift(&self, n: usize) -> Self {
        let order = self.order();
        let coeffs =
            (0..=order).map(|i| if i < n { BigRational::zero() } else { self.coeffs[i - n].clone() }).collect();
        PowerSeries { coeffs }
    }

    /// The derivative loses one order.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return PowerSeries::zero(0);
        }
        PowerSeries { coeffs: (1..=self.order()).map(|i| &self.coeffs[i] * BigInt::from(i)).collect() }
    }

    /// Antiderivative with zero constant term; gains one order.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / BigInt::from(i + 1)));
        PowerSeries { coeffs }
    }

    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(AlgebraError::PoleAtOrigin);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let mut acc = if n == 0 { BigRational::one() } else { BigRational::zero() };
            for i in 1..=n {
                acc -= &self.coeffs[i] * &out[n - i];
            }
            out.push(acc / c0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `exp(s)` for `s(0) = 0`, via `n e_n = sum_k k s_k e_(n-k)`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let mut e: Vec<BigRational> = vec![BigRational::one()];
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * BigInt::from(k) * &e[n - k];
                }
            }
            e.push(acc / BigInt::from(n));
        }
        Ok(PowerSeries { coeffs: e })
    }

    /// `log(s)` for `s(0) = 1`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::LogConstantTerm);
        }
        if self.order() == 0 {
            return Ok(PowerSeries::zero(0));
        }
        let quotient = self.derivative().mul(&self.reciprocal()?);
        Ok(quotient.integral())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, "z", f)?;
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Square matrix of rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RfMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl RfMatrix {
    pub fn zeros(n: usize) -> Self {
        RfMatrix { n, entries: vec![RationalFunction::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RfMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RfMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        let n = m.dim();
        RfMatrix { n, entries: (0..n * n).map(|i| RationalFunction::from_bigint(m.get(i / n, i % n))).collect() }
    }

    /// `z^k M` for an integer matrix `M`.
    pub fn monomial_times(m: &IntMatrix, k: usize) -> Self {
        RfMatrix::from_int_matrix(m).scale_rf(&RationalFunction::z_pow(k))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.n + j] = v;
    }

    fn zip(&self, other: &Self, f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        RfMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, RationalFunction::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, RationalFunction::sub)
    }

    pub fn scale_rf(&self, k: &RationalFunction) -> Self {
        RfMatrix { n: self.n, entries: self.entries.iter().map(|x| x.mul(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = RfMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RationalFunction::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).fold(RationalFunction::zero(), |acc, j| acc.add(&self.get(i, j).mul(&v[j]))))
            .collect()
    }

    pub fn trace(&self) -> RationalFunction {
        (0..self.n).fold(RationalFunction::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Common denominator and the matrix of numerators over it.
    fn to_polynomial_matrix(&self) -> (Polynomial, Vec<Vec<Polynomial>>) {
        let mut common = Polynomial::one();
        for e in &self.entries {
            let g = common.gcd(e.den());
            common = common.mul(&e.den().exact_div(&g));
        }
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.num().mul(&common.exact_div(e.den()))
                    })
                    .collect()
            })
            .collect();
        (common, rows)
    }

    pub fn det(&self) -> RationalFunction {
        let (common, rows) = self.to_polynomial_matrix();
        let d = poly_det(rows);
        RationalFunction::canonical(d, common.pow(self.n as u32))
    }

    /// Exact inverse: cofactor adjugate up to dimension 3, fraction-free
    /// Gauss-Jordan elimination above.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.n;
        let (common, rows) = self.to_polynomial_matrix();
        let (det, adj) = if n <= 3 { cofactor_adjugate(&rows) } else { bareiss_adjugate(rows) };
        if det.is_zero() {
            return Err(AlgebraError::Singular);
        }
        // M = A / c, so M^-1 = c adj(A) / det(A)
        let mut out = RfMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, RationalFunction::canonical(adj[i][j].mul(&common), det.clone()));
            }
        }
        Ok(out)
    }

    /// Entrywise series to `order`.
    pub fn series(&self, order: usize) -> Result<Vec<Vec<PowerSeries>>, AlgebraError> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).series(order)).collect()).collect()
    }
}

impl fmt::Display for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn minor(rows: &[Vec<Polynomial>], skip_r: usize, skip_c: usize) -> Vec<Vec<Polynomial>> {
    rows.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip_r)
        .map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != skip_c).map(|(_, x)| x.clone()).collect())
        .collect()
}

fn cofactor_det(rows: &[Vec<Polynomial>]) -> Polynomial {
    match rows.len() {
        0 => Polynomial::one(),
        1 => rows[0][0].clone(),
        2 => rows[0][0].mul(&rows[1][1]).sub(&rows[0][1].mul(&rows[1][0])),
        n => (0..n).fold(Polynomial::zero(), |acc, j| {
            let term = rows[0][j].mul(&cofactor_det(&minor(rows, 0, j)));
            if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        }),
    }
}

fn cofactor_adjugate(rows: &[Vec<Polynomial>]) -> (Polynomial, Vec<Vec<Polynomial>>) {
    let n = rows.len();
    let det = cofactor_det(rows);
    let adj = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = cofactor_det(&minor(rows, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.neg()
                    }
                })
                .collect()
        })
        .collect();
    (det, adj)
}

/// Fraction-free determinant over polynomials.
fn poly_det(mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j])).exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Fraction-free Gauss-Jordan on `[A | I]`; returns `(det A, adj A)`.
fn bareiss_adjugate(a: Vec<Vec<Polynomial>>) -> (Polynomial, Vec<Vec<Polynomial>>) {
    let n = a.len();
    let mut m: Vec<Vec<Polynomial>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Polynomial::one() } else { Polynomial::zero() }));
            row
        })
        .collect();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return (Polynomial::zero(), Vec::new()),
            }
        }
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                m[i][j] = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j])).exact_div(&prev);
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    // left block is now det(PA) I and the right block adj(PA) = det(PA) (PA)^-1
    let det = if negate { prev.neg() } else { prev };
    let adj = m
        .into_iter()
        .map(|row| row[n..].iter().map(|x| if negate { x.neg() } else { x.clone() }).collect())
        .collect();
    (det, adj)
}
