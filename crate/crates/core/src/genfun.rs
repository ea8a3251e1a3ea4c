//! Generating functions of convergent monomials
//! `F_s(z) = sum_n p_n^(r-s) q_n^s z^n` and their closed forms
//! `P_0 + (I - z^l N)^-1 P_1` with `N = N_0 N_1 N_0^-1` at level `r`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cf::{monomial_vector, CFExpansion, Convergents};
use crate::error::{GenFunError, SurdError};
use crate::matrix::IntMatrix;
use crate::poly::Polynomial;
use crate::ratfun::{PowerSeries, RationalFunction, RfMatrix};
use crate::real::Real;
use crate::surd::QuadraticSurd;

/// Largest supported monomial level; the symbolic inverse grows quickly.
pub const MAX_LEVEL: usize = 4;

fn check_level(r: usize) -> Result<(), GenFunError> {
    if r == 0 || r > MAX_LEVEL {
        return Err(GenFunError::LevelOutOfRange { got: r, max: MAX_LEVEL });
    }
    Ok(())
}

/// Entry `s` is `F_{p^(r-s) q^s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunVector {
    r: usize,
    entries: Vec<RationalFunction>,
}

impl GenFunVector {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn get(&self, s: usize) -> &RationalFunction {
        &self.entries[s]
    }

    /// `(F_p, F_q)` at level 1.
    pub fn pair(&self) -> Option<(&RationalFunction, &RationalFunction)> {
        (self.r == 1).then(|| (&self.entries[0], &self.entries[1]))
    }
}

/// `N_0 N_1 N_0^-1` at level `r`.
pub fn conjugated_period_matrix(cf: &CFExpansion, r: usize) -> IntMatrix {
    let (n0, n1) = cf.n0_n1(r);
    let inv = n0.inverse_unimodular().expect("products of E matrices are unimodular");
    &(&n0 * &n1) * &inv
}

/// `P_0 = sum_{n<k} z^n v_n` and `P_1 = sum_{k<=n<k+l} z^n v_n`.
pub fn p0_p1(cf: &CFExpansion, r: usize) -> Result<(Vec<Polynomial>, Vec<Polynomial>), GenFunError> {
    check_level(r)?;
    let (k, l) = (cf.k(), cf.ell());
    let mut p0 = vec![vec![BigInt::zero(); k]; r + 1];
    let mut p1 = vec![vec![BigInt::zero(); k + l]; r + 1];
    for (n, (p, q)) in Convergents::new(cf).take(k + l).enumerate() {
        let target = if n < k { &mut p0 } else { &mut p1 };
        for (s, c) in monomial_vector(&p, &q, r).into_iter().enumerate() {
            target[s][n] = c;
        }
    }
    let p0 = p0.iter().map(|c| Polynomial::from_ints(c)).collect();
    let p1 = p1.iter().map(|c| Polynomial::from_ints(c)).collect();
    Ok((p0, p1))
}

/// `F = P_0 + (I - z^l N)^-1 P_1` with `N = N_0 N_1 N_0^-1`.
///
/// The resolvent is assembled in `w = z^l` as `adj(I - w N) / det(I - w N)`,
/// where `adj(I - w N) = det(I - w N) sum_{j<=r} w^j N^j mod w^(r+1)`, so
/// each entry is canonicalized once.
pub fn generating_vector(cf: &CFExpansion, r: usize) -> Result<GenFunVector, GenFunError> {
    let (p0, p1) = p0_p1(cf, r)?;
    let n = conjugated_period_matrix(cf, r);
    let l = cf.ell();
    let det = n.reversed_charpoly();
    let mut powers = vec![IntMatrix::identity(r + 1)];
    for j in 1..=r {
        powers.push(&powers[j - 1] * &n);
    }
    let mut adj = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let mut acc = IntMatrix::zeros(r + 1);
        for (i, c) in det.iter().enumerate().take(j + 1) {
            acc = acc.add(&powers[j - i].scale(c));
        }
        adj.push(acc);
    }
    let den = Polynomial::from_ints(&det).compose_power(l);
    let entries = (0..=r)
        .map(|s| {
            let mut num = p0[s].mul(&den);
            for (j, a) in adj.iter().enumerate() {
                for (t, p) in p1.iter().enumerate() {
                    let c = BigRational::from_integer(a.get(s, t).clone());
                    num = num.add(&p.scale(&c).shift(j * l));
                }
            }
            RationalFunction::new(num, den.clone())
        })
        .collect::<Result<_, _>>()?;
    Ok(GenFunVector { r, entries })
}

/// `sum_{n<=order} p_n^(r-s) q_n^s z^n` straight from the convergents.
pub fn direct_series(cf: &CFExpansion, r: usize, s: usize, order: usize) -> Result<PowerSeries, GenFunError> {
    check_level(r)?;
    if s > r {
        return Err(GenFunError::IndexAboveLevel { s, r });
    }
    let coeffs: Vec<BigInt> =
        Convergents::new(cf).take(order + 1).map(|(p, q)| p.pow((r - s) as u32) * q.pow(s as u32)).collect();
    Ok(PowerSeries::from_ints(&coeffs))
}

/// Dominant root `(|t| + sqrt(t^2 - 4 det)) / 2` of `x^2 - t x + det`.
pub fn dominant_root_2x2(trace: &BigInt, det: &BigInt, bits: u32) -> Real {
    let disc = trace * trace - BigInt::from(4) * det;
    assert!(disc > BigInt::zero(), "roots must be real and distinct");
    let root = Real::from_bigint(&disc, bits).sqrt();
    Real::from_bigint(&num_traits::Signed::abs(trace), bits).add(&root).ldexp(-1)
}

/// Spectral radius of a primitive nonnegative integer matrix by exact power
/// iteration (ratio of 1-norms).
pub fn perron_root(m: &IntMatrix, bits: u32) -> Real {
    assert!(m.is_nonnegative(), "power iteration needs a nonnegative matrix");
    let tol = Real::from_i64(1, bits).ldexp(-(bits.max(48) as i64) + 8);
    let mut v: Vec<BigInt> = vec![BigInt::one(); m.dim()];
    let mut norm: BigInt = v.iter().sum();
    let mut last: Option<Real> = None;
    for _ in 0..100_000 {
        let w = m.mul_vec(&v);
        let w_norm: BigInt = w.iter().sum();
        let ratio = Real::from_ratio(&w_norm, &norm, bits);
        if let Some(prev) = &last {
            if ratio.sub(prev).abs().cmp_value(&ratio.mul(&tol)).is_le() {
                return ratio;
            }
        }
        // keep the vector small: divide by the gcd of entries
        let g = w.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        v = if g > BigInt::one() { w.iter().map(|x| x / &g).collect() } else { w };
        norm = v.iter().sum();
        last = Some(ratio);
    }
    last.expect("at least one iteration")
}

/// Spectral radius of `N_1` at level `r`: exact quadratic root for `r = 1`,
/// power iteration above.
pub fn period_spectral_radius(cf: &CFExpansion, r: usize, bits: u32) -> Result<Real, GenFunError> {
    check_level(r)?;
    let n1 = cf.n0_n1(r).1;
    Ok(if r == 1 { dominant_root_2x2(&n1.trace(), &n1.det(), bits) } else { perron_root(&n1, bits) })
}

/// `specrad(N_1 at level r)^(-1/l)`.
pub fn radius_of_convergence(cf: &CFExpansion, r: usize, bits: u32) -> Result<Real, GenFunError> {
    let rho = period_spectral_radius(cf, r, bits)?;
    Ok(rho.ln().div_int(-(cf.ell() as i64)).exp())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub m: usize,
    pub r: usize,
    pub order: usize,
    /// Closed forms agree as rational functions.
    pub exact: bool,
    /// Series from the convergents agree to `order`.
    pub series: bool,
    pub mismatch: Option<String>,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.exact && self.series
    }
}

/// Checks `F(x) = sum_{n<m} z^n v_n(x) + z^m E F(T^m x)` with
/// `E = E(a_1; r)...E(a_m; r)`, both in closed form and on series.
pub fn shift_identity_check(x: &QuadraticSurd, m: usize, r: usize, order: usize) -> Result<ShiftReport, GenFunError> {
    check_level(r)?;
    let cf = CFExpansion::expand(x)?;
    let mut image = x.clone();
    for _ in 0..m {
        image = image.gauss_step()?.1;
    }
    let cf_image = CFExpansion::expand(&image)?;
    let e = cf.e_product(1, m, r);
    let head: Vec<Vec<BigInt>> = Convergents::new(&cf).take(m).map(|(p, q)| monomial_vector(&p, &q, r)).collect();
    let mut mismatch = None;

    let lhs = generating_vector(&cf, r)?;
    let rhs_tail = RfMatrix::monomial_times(&e, m).mul_vec(generating_vector(&cf_image, r)?.entries());
    let mut exact = true;
    for s in 0..=r {
        let mut rhs = rhs_tail[s].clone();
        for (n, v) in head.iter().enumerate() {
            rhs = rhs.add(&RationalFunction::from_polynomial(Polynomial::monomial(BigRational::from_integer(v[s].clone()), n)));
        }
        if &rhs != lhs.get(s) {
            exact = false;
            mismatch.get_or_insert_with(|| format!("closed forms differ at s = {s}: {} vs {}", lhs.get(s), rhs));
        }
    }

    let mut series = true;
    let lhs_series: Vec<PowerSeries> = (0..=r).map(|s| direct_series(&cf, r, s, order)).collect::<Result<_, _>>()?;
    let img_series: Vec<PowerSeries> =
        (0..=r).map(|s| direct_series(&cf_image, r, s, order)).collect::<Result<_, _>>()?;
    for s in 0..=r {
        for n in 0..=order {
            let expected = lhs_series[s].coeff(n);
            let got: BigRational = if n < m {
                BigRational::from_integer(head[n][s].clone())
            } else {
                (0..=r).map(|j| img_series[j].coeff(n - m) * e.get(s, j)).fold(BigRational::zero(), |a, b| a + b)
            };
            if &got != expected {
                series = false;
                mismatch.get_or_insert_with(|| format!("series differ at s = {s}, n = {n}"));
            }
        }
    }
    Ok(ShiftReport { m, r, order, exact, series, mismatch })
}

impl From<SurdError> for GenFunError {
    fn from(e: SurdError) -> Self {
        GenFunError::Cf(e.into())
    }
}
