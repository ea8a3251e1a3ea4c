//! Real quadratic surds `(p + sqrt(d)) / q`.
//!
//! Every surd is kept in the reduced "PQa" shape where `q` divides `d - p^2`.
//! In that shape the Gauss map `x -> {1/x}` stays inside the same radicand,
//! which is what makes period detection an exact hash lookup.
//!
//! All comparisons against irrational quantities go through integer square
//! roots; nothing in this module touches floating point except
//! [`QuadraticSurd::to_f64`].

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SurdError;
use crate::real::Real;

pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = isqrt(n);
    &s * &s == *n
}

/// A real quadratic irrational `(p + sqrt(d)) / q` with `q | d - p^2`.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl QuadraticSurd {
    /// Builds `(p + sqrt(d)) / q`, rescaling into canonical form if `q` does
    /// not divide `d - p^2`.
    pub fn new(p: BigInt, q: BigInt, d: BigInt) -> Result<Self, SurdError> {
        if q.is_zero() {
            return Err(SurdError::ZeroDenominator);
        }
        if !d.is_positive() {
            return Err(SurdError::NonPositiveRadicand(d));
        }
        if is_perfect_square(&d) {
            return Err(SurdError::PerfectSquareRadicand(d));
        }
        if (&d - &p * &p).is_multiple_of(&q) {
            return Ok(QuadraticSurd { p, q, d });
        }
        let aq = q.abs();
        Ok(QuadraticSurd { p: &p * &aq, d: &d * &q * &q, q: &q * &aq })
    }

    pub fn from_i64(p: i64, q: i64, d: i64) -> Result<Self, SurdError> {
        QuadraticSurd::new(BigInt::from(p), BigInt::from(q), BigInt::from(d))
    }

    /// Skips validation; callers guarantee the canonical invariant.
    pub(crate) fn from_canonical(p: BigInt, q: BigInt, d: BigInt) -> Self {
        debug_assert!(!q.is_zero() && (&d - &p * &p).is_multiple_of(&q));
        QuadraticSurd { p, q, d }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        let s = isqrt(&self.d);
        if self.q.is_positive() {
            // floor((p + sqrt d)/q) == floor((p + isqrt d)/q) for q > 0
            (&self.p + &s).div_floor(&self.q)
        } else {
            // value = (-p - sqrt d)/|q|, and -p - sqrt d lies in (-p-s-1, -p-s)
            let m = -&self.q;
            (-&self.p - &s - BigInt::one()).div_floor(&m)
        }
    }

    /// `x - n` for an integer `n`.
    pub fn sub_integer(&self, n: &BigInt) -> QuadraticSurd {
        QuadraticSurd::from_canonical(&self.p - n * &self.q, self.q.clone(), self.d.clone())
    }

    /// Fractional part and integer part.
    pub fn split_integer(&self) -> (BigInt, QuadraticSurd) {
        let n = self.floor();
        let frac = self.sub_integer(&n);
        (n, frac)
    }

    pub fn is_in_unit_interval(&self) -> bool {
        // irrational, so floor == 0 already excludes both endpoints
        self.floor().is_zero()
    }

    /// `1 / x`, still canonical: `q / (p + sqrt d) = (-p + sqrt d) / ((d - p^2)/q)`.
    pub fn recip(&self) -> QuadraticSurd {
        let nq = (&self.d - &self.p * &self.p) / &self.q;
        QuadraticSurd::from_canonical(-&self.p, nq, self.d.clone())
    }

    /// One step of the Gauss map: returns `a = floor(1/x)` and `{1/x}`.
    pub fn gauss_step(&self) -> Result<(BigInt, QuadraticSurd), SurdError> {
        if !self.is_in_unit_interval() {
            return Err(SurdError::OutsideUnitInterval(self.to_string()));
        }
        Ok(self.gauss_step_unchecked())
    }

    pub(crate) fn gauss_step_unchecked(&self) -> (BigInt, QuadraticSurd) {
        let y = self.recip();
        let a = y.floor();
        let next = y.sub_integer(&a);
        (a, next)
    }

    pub fn galois_conjugate(&self) -> QuadraticSurd {
        QuadraticSurd::from_canonical(-&self.p, -&self.q, self.d.clone())
    }

    /// Primitive `(a, b, c)` with `a > 0` and `a x^2 + b x + c = 0`.
    pub fn minimal_polynomial(&self) -> (BigInt, BigInt, BigInt) {
        // q x - p = sqrt d  =>  q^2 x^2 - 2pq x + p^2 - d = 0
        let a = &self.q * &self.q;
        let b = -BigInt::from(2) * &self.p * &self.q;
        let c = &self.p * &self.p - &self.d;
        let g = a.gcd(&b).gcd(&c);
        (a / &g, b / &g, c / &g)
    }

    /// The same value as a field element `a + b sqrt(d)`.
    pub fn to_quad(&self) -> QuadNumber {
        QuadNumber::new(
            BigRational::new(self.p.clone(), self.q.clone()),
            BigRational::new(BigInt::one(), self.q.clone()),
            self.d.clone(),
        )
    }

    /// Approximation with relative error below `2^(1 - bits)`.
    pub fn to_real(&self, bits: u32) -> Real {
        assert!(bits >= 53, "precision below 53 bits");
        let s = isqrt(&self.d);
        // |p + sqrt d| >= 1 / (sqrt d + |p|), so this many extra bits keeps
        // the relative error of the numerator below 2^-(bits+2)
        let guard = (&s + self.p.abs() + 1u32).bits() as u32;
        let w = bits + 2 + guard;
        let scaled_root = isqrt(&(&self.d << (2 * w) as usize));
        let num = (&self.p << w as usize) + scaled_root;
        let den = &self.q << w as usize;
        Real::from_ratio(&num, &den, bits + 2)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_real(64).to_f64()
    }

    /// Value-level identity: `(p/q, d/q^2, sign q)` determine the number.
    fn invariants(&self) -> (BigRational, BigRational, bool) {
        (
            BigRational::new(self.p.clone(), self.q.clone()),
            BigRational::new(self.d.clone(), &self.q * &self.q),
            self.q.is_positive(),
        )
    }
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        if self.d == other.d {
            return self.p == other.p && self.q == other.q;
        }
        self.invariants() == other.invariants()
    }
}

impl Eq for QuadraticSurd {}

impl Hash for QuadraticSurd {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.invariants().hash(state);
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}

/// An element `a + b sqrt(d)` of a real quadratic field, `a, b` rational.
///
/// `d` is any positive non-square; it need not be squarefree, but two
/// elements can only be combined when their `d` agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadNumber {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadNumber {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        QuadNumber { a, b, d }
    }

    pub fn from_integer(n: &BigInt, d: &BigInt) -> Self {
        QuadNumber::new(BigRational::from_integer(n.clone()), BigRational::zero(), d.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, other: &QuadNumber) {
        assert_eq!(self.d, other.d, "mixing different quadratic fields");
    }

    pub fn add(&self, other: &QuadNumber) -> QuadNumber {
        self.check(other);
        QuadNumber::new(&self.a + &other.a, &self.b + &other.b, self.d.clone())
    }

    pub fn sub(&self, other: &QuadNumber) -> QuadNumber {
        self.check(other);
        QuadNumber::new(&self.a - &other.a, &self.b - &other.b, self.d.clone())
    }

    pub fn mul(&self, other: &QuadNumber) -> QuadNumber {
        self.check(other);
        let d = BigRational::from_integer(self.d.clone());
        QuadNumber::new(
            &self.a * &other.a + &self.b * &other.b * d,
            &self.a * &other.b + &self.b * &other.a,
            self.d.clone(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> QuadNumber {
        let k = BigRational::from_integer(k.clone());
        QuadNumber::new(&self.a * &k, &self.b * &k, self.d.clone())
    }

    pub fn conjugate(&self) -> QuadNumber {
        QuadNumber::new(self.a.clone(), -&self.b, self.d.clone())
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> QuadNumber {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        let c = self.conjugate();
        QuadNumber::new(&c.a / &n, &c.b / &n, self.d.clone())
    }

    pub fn div(&self, other: &QuadNumber) -> QuadNumber {
        self.mul(&other.recip())
    }

    /// Exact sign, decided by comparing `a^2` with `d b^2`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: whichever square is larger wins
        let a2 = &self.a * &self.a;
        let db2 = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        if a2 > db2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> QuadNumber {
        if self.signum() < 0 {
            QuadNumber::new(-&self.a, -&self.b, self.d.clone())
        } else {
            self.clone()
        }
    }

    /// Re-expresses a genuinely irrational element as a canonical surd.
    pub fn to_surd(&self) -> Result<QuadraticSurd, SurdError> {
        if self.b.is_zero() {
            return Err(SurdError::Rational(self.a.to_string()));
        }
        // a = A/L, b = B/L over a common positive denominator L
        let l = self.a.denom().lcm(self.b.denom());
        let big_a = self.a.numer() * (&l / self.a.denom());
        let big_b = self.b.numer() * (&l / self.b.denom());
        let rad = &big_b * &big_b * &self.d;
        if big_b.is_positive() {
            QuadraticSurd::new(big_a, l, rad)
        } else {
            QuadraticSurd::new(-big_a, -l, rad)
        }
    }

    pub fn to_real(&self, bits: u32) -> Real {
        let work = bits + 16;
        let root = Real::from_bigint(&self.d, work + self.d.bits() as u32).sqrt();
        let a = Real::from_ratio(self.a.numer(), self.a.denom(), work);
        let b = Real::from_ratio(self.b.numer(), self.b.denom(), work);
        if sign_of(&self.a) * sign_of(&self.b) >= 0 {
            return a.add(&b.mul(&root)).with_precision(bits);
        }
        // opposite signs cancel; divide the exact norm by the conjugate instead
        let norm = self.norm();
        let num = Real::from_ratio(norm.numer(), norm.denom(), work);
        num.div(&a.sub(&b.mul(&root))).with_precision(bits)
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
