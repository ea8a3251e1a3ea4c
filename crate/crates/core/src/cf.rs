//! Eventually periodic simple continued fractions.
//!
//! `theta = [a_1, ..., a_k; (a_{k+1}, ..., a_{k+l})]` in `(0, 1)`, with `k`
//! and `l` both minimal. Convergents are 0-indexed with seeds
//! `(p_0, q_0) = (0, 1)` and `(p_1, q_1) = (1, a_1)`; internally the
//! recurrence also starts from the virtual pair `(p_{-1}, q_{-1}) = (1, 0)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{CfError, SurdError};
use crate::matrix::IntMatrix;
use crate::surd::{QuadNumber, QuadraticSurd};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFExpansion {
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl CFExpansion {
    /// Builds an expansion and reduces it to minimal preperiod and period.
    pub fn new(preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self, CfError> {
        if period.is_empty() {
            return Err(CfError::EmptyPeriod);
        }
        if preperiod.iter().chain(&period).any(|&a| a == 0) {
            return Err(CfError::ZeroQuotient);
        }
        let mut period = minimal_block(&period).to_vec();
        let mut preperiod = preperiod;
        // roll the cycle backwards while the preperiod tail agrees with it
        while let Some(&last) = preperiod.last() {
            if last != *period.last().unwrap() {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(CFExpansion { preperiod, period })
    }

    pub fn purely_periodic(period: Vec<u64>) -> Result<Self, CfError> {
        CFExpansion::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// Minimal preperiod length `k`.
    pub fn k(&self) -> usize {
        self.preperiod.len()
    }

    /// Minimal period length `l`.
    pub fn ell(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient `a_n`, 1-indexed.
    pub fn quotient(&self, n: usize) -> u64 {
        assert!(n >= 1, "partial quotients are 1-indexed");
        let k = self.k();
        if n <= k {
            self.preperiod[n - 1]
        } else {
            self.period[(n - k - 1) % self.ell()]
        }
    }

    pub fn quotients(&self, count: usize) -> Vec<u64> {
        (1..=count).map(|n| self.quotient(n)).collect()
    }

    /// Expansion of `T^m(theta)`, i.e. the tail `[a_{m+1}, a_{m+2}, ...]`.
    pub fn shifted(&self, m: usize) -> CFExpansion {
        let k = self.k();
        if m <= k {
            return CFExpansion { preperiod: self.preperiod[m..].to_vec(), period: self.period.clone() };
        }
        let mut period = self.period.clone();
        period.rotate_left((m - k) % self.ell());
        CFExpansion { preperiod: Vec::new(), period }
    }

    /// The purely periodic tail `theta^k`.
    pub fn periodic_part(&self) -> CFExpansion {
        self.shifted(self.k())
    }

    /// Expands a surd in `(0, 1)`; stops at the first repeated complete quotient.
    pub fn expand(x: &QuadraticSurd) -> Result<CFExpansion, SurdError> {
        if !x.is_in_unit_interval() {
            return Err(SurdError::OutsideUnitInterval(x.to_string()));
        }
        // the radicand is invariant along the orbit, so (P, Q) identifies a quotient
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut digits = Vec::new();
        let mut current = x.clone();
        loop {
            let key = (current.p().clone(), current.q().clone());
            if let Some(&start) = seen.get(&key) {
                let period = digits[start..].to_vec();
                digits.truncate(start);
                return Ok(CFExpansion { preperiod: digits, period });
            }
            seen.insert(key, digits.len());
            let (a, next) = current.gauss_step_unchecked();
            digits.push(a.to_u64().ok_or(SurdError::QuotientOverflow(a))?);
            current = next;
        }
    }

    /// The exact value as a surd.
    pub fn to_surd(&self) -> QuadraticSurd {
        let n1 = self.n0_n1(1).1;
        let (al, be, ga, de) = (n1.get(0, 0), n1.get(0, 1), n1.get(1, 0), n1.get(1, 1));
        // fixed point of t -> (al t + be)/(ga t + de): ga t^2 + (de - al) t - be = 0
        let disc = (de - al) * (de - al) + BigInt::from(4) * be * ga;
        let two_ga = BigInt::from(2) * ga;
        let t = QuadNumber::new(
            BigRational::new(al - de, two_ga.clone()),
            BigRational::new(BigInt::one(), two_ga),
            disc.clone(),
        );
        let mut theta = t;
        for &a in self.preperiod.iter().rev() {
            // theta <- 1 / (a + theta)
            theta = theta.add(&QuadNumber::from_integer(&BigInt::from(a), &disc)).recip();
        }
        theta.to_surd().expect("an eventually periodic expansion is irrational")
    }

    /// First `count` convergents `(p_0, q_0), (p_1, q_1), ...`.
    pub fn convergents(&self, count: usize) -> Vec<(BigInt, BigInt)> {
        Convergents::new(self).take(count).collect()
    }

    /// `N_0 = E(a_1; r)...E(a_k; r)` and `N_1 = E(a_{k+1}; r)...E(a_{k+l}; r)`.
    pub fn n0_n1(&self, r: usize) -> (IntMatrix, IntMatrix) {
        let k = self.k();
        (self.e_product(1, k, r), self.e_product(k + 1, k + self.ell(), r))
    }

    /// `E(a_lo; r) ... E(a_hi; r)`, the identity when `hi < lo`.
    pub fn e_product(&self, lo: usize, hi: usize, r: usize) -> IntMatrix {
        let mut acc = IntMatrix::identity(r + 1);
        for n in lo..=hi {
            acc = &acc * &e_matrix(self.quotient(n), r);
        }
        acc
    }

    /// Entries of `E(a_{n-m}) ... E(a_n)` at level 1, named as
    /// `[[B^(m), B^(m+1)], [A^(m), A^(m+1)]]` with subscript `n - m - 1`.
    pub fn ab_coefficients(&self, n: usize, m: usize) -> Result<AbCoefficients, CfError> {
        if n == 0 || m > n - 1 {
            return Err(CfError::IndexRange(format!("need 0 <= m <= n - 1, got n = {n}, m = {m}")));
        }
        let prod = self.e_product(n - m, n, 1);
        Ok(AbCoefficients {
            a_m: prod.get(1, 0).clone(),
            a_m1: prod.get(1, 1).clone(),
            b_m: prod.get(0, 0).clone(),
            b_m1: prod.get(0, 1).clone(),
        })
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{};({})]", join(&self.preperiod), join(&self.period))
    }
}

/// Smallest block whose repetition gives `period`.
fn minimal_block(period: &[u64]) -> &[u64] {
    let l = period.len();
    for d in (1..=l).filter(|d| l.is_multiple_of(*d)) {
        if (d..l).all(|i| period[i] == period[i - d]) {
            return &period[..d];
        }
    }
    period
}

/// Minimal period length of a finite block read cyclically.
pub fn minimal_period_len(block: &[u64]) -> usize {
    minimal_block(block).len()
}

/// `(A^(m), A^(m+1), B^(m), B^(m+1))` at a fixed subscript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbCoefficients {
    pub a_m: BigInt,
    pub a_m1: BigInt,
    pub b_m: BigInt,
    pub b_m1: BigInt,
}

/// Streams `(p_n, q_n)` for `n = 0, 1, 2, ...`.
pub struct Convergents<'a> {
    cf: &'a CFExpansion,
    n: usize,
    prev: (BigInt, BigInt),
    cur: (BigInt, BigInt),
}

impl<'a> Convergents<'a> {
    pub fn new(cf: &'a CFExpansion) -> Self {
        Convergents { cf, n: 0, prev: (BigInt::one(), BigInt::zero()), cur: (BigInt::zero(), BigInt::one()) }
    }
}

impl Iterator for Convergents<'_> {
    type Item = (BigInt, BigInt);

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.cur.clone();
        self.n += 1;
        let a = BigInt::from(self.cf.quotient(self.n));
        let next = (&a * &self.cur.0 + &self.prev.0, &a * &self.cur.1 + &self.prev.1);
        self.prev = std::mem::replace(&mut self.cur, next);
        Some(out)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The `(r+1) x (r+1)` matrix carrying degree-`r` monomials in `(p, q)`
/// across one Gauss step. Row `i` holds `C(i, j) a^j` in column `r - i + j`.
pub fn e_matrix(a: u64, r: usize) -> IntMatrix {
    let a = BigInt::from(a);
    let mut m = IntMatrix::zeros(r + 1);
    for i in 0..=r {
        let mut power = BigInt::one();
        for j in 0..=i {
            m.set(i, r - i + j, binomial(i, j) * &power);
            power *= &a;
        }
    }
    m
}

/// `E(a; r) = R(r) U(a; r)` with `R` the anti-diagonal permutation and `U`
/// upper triangular with unit diagonal.
pub fn e_factorization(a: u64, r: usize) -> (IntMatrix, IntMatrix) {
    let mut rev = IntMatrix::zeros(r + 1);
    for i in 0..=r {
        rev.set(i, r - i, BigInt::one());
    }
    let big_a = BigInt::from(a);
    let mut upper = IntMatrix::zeros(r + 1);
    for i in 0..=r {
        let mut power = BigInt::one();
        for j in 0..=(r - i) {
            upper.set(i, i + j, binomial(r - i, j) * &power);
            power *= &big_a;
        }
    }
    (rev, upper)
}

/// Degree-`r` monomial vector `(p^r, p^(r-1) q, ..., q^r)`.
pub fn monomial_vector(p: &BigInt, q: &BigInt, r: usize) -> Vec<BigInt> {
    (0..=r).map(|s| p.pow((r - s) as u32) * q.pow(s as u32)).collect()
}
