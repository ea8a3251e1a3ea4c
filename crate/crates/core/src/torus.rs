//! Hyperbolic automorphisms of the 2-torus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cf::{minimal_period_len, CFExpansion};
use crate::error::TorusError;
use crate::genfun::{conjugated_period_matrix, dominant_root_2x2};
use crate::matrix::IntMatrix;
use crate::poly::Polynomial;
use crate::ratfun::{PowerSeries, RationalFunction};
use crate::real::Real;

/// Largest `|det(M^n - I)|` the brute-force enumeration accepts.
pub const BRUTE_FORCE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToralAutomorphism {
    m: IntMatrix,
}

impl ToralAutomorphism {
    pub fn new(m: IntMatrix) -> Result<Self, TorusError> {
        if m.dim() != 2 {
            return Err(TorusError::NotTwoByTwo);
        }
        let det = m.det();
        if !det.abs().is_one() {
            return Err(TorusError::NotUnimodular(det));
        }
        let trace = m.trace();
        let hyperbolic = if det.is_one() { trace.abs() > BigInt::from(2) } else { !trace.is_zero() };
        if !hyperbolic {
            return Err(TorusError::NotHyperbolic { trace, det });
        }
        Ok(ToralAutomorphism { m })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, TorusError> {
        ToralAutomorphism::new(IntMatrix::from_i64(&[&[a, b], &[c, d]]))
    }

    /// The map induced by `N_0 N_1 N_0^-1` at level 1.
    pub fn from_quadratic(cf: &CFExpansion) -> Self {
        ToralAutomorphism::new(conjugated_period_matrix(cf, 1)).expect("period matrices of quadratic irrationals are hyperbolic")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn trace(&self) -> BigInt {
        self.m.trace()
    }

    pub fn det(&self) -> BigInt {
        self.m.det()
    }

    /// `#Fix(f^n) = |det(I - M^n)|`.
    pub fn fix_count(&self, n: u64) -> Result<BigInt, TorusError> {
        if n == 0 {
            return Err(TorusError::ZeroIterate);
        }
        Ok(IntMatrix::identity(2).sub(&self.m.pow(n)).det().abs())
    }

    /// All `x` in `[0,1)^2` with `M^n x = x` mod 1, found by scanning the
    /// integer points of `(M^n - I)[0,1)^2` column by column.
    pub fn fix_points_bruteforce(&self, n: u64) -> Result<Vec<(BigRational, BigRational)>, TorusError> {
        let count = self.fix_count(n)?;
        if count > BigInt::from(BRUTE_FORCE_LIMIT) {
            return Err(TorusError::GuardExceeded { count, limit: BRUTE_FORCE_LIMIT });
        }
        let a_mat = self.m.pow(n).sub(&IntMatrix::identity(2));
        let (a, b, c, d) = (a_mat.get(0, 0), a_mat.get(0, 1), a_mat.get(1, 0), a_mat.get(1, 1));
        let det = a_mat.det();
        // x = adj(A) v / det; each coordinate of adj(A) v must land in [0, det) or (det, 0]
        let (lo, hi) = if det.is_positive() { (BigInt::zero(), &det - 1) } else { (&det + 1, BigInt::zero()) };
        let zero = BigInt::zero();
        let v1_min = a.min(&zero) + b.min(&zero);
        let v1_max = a.max(&zero) + b.max(&zero);
        let mut points = Vec::new();
        let mut v1 = v1_min;
        while v1 <= v1_max {
            // d v1 - b v2 in [lo, hi] and -c v1 + a v2 in [lo, hi]
            let mut range = (None::<BigInt>, None::<BigInt>);
            let ok = restrict(&mut range, &-b, &lo - d * &v1, &hi - d * &v1)
                && restrict(&mut range, a, &lo + c * &v1, &hi + c * &v1);
            if ok {
                let (Some(start), Some(end)) = range else {
                    unreachable!("a nonsingular matrix bounds v2")
                };
                let mut v2 = start;
                while v2 <= end {
                    let x1 = BigRational::new(d * &v1 - b * &v2, det.clone());
                    let x2 = BigRational::new(-c * &v1 + a * &v2, det.clone());
                    points.push((x1, x2));
                    v2 += 1;
                }
            }
            v1 += 1;
        }
        Ok(points)
    }

    /// Whether `M^n x = x` mod 1.
    pub fn is_fixed(&self, n: u64, x: &(BigRational, BigRational)) -> bool {
        let p = self.m.pow(n);
        let img1 = BigRational::from_integer(p.get(0, 0).clone()) * &x.0 + BigRational::from_integer(p.get(0, 1).clone()) * &x.1;
        let img2 = BigRational::from_integer(p.get(1, 0).clone()) * &x.0 + BigRational::from_integer(p.get(1, 1).clone()) * &x.1;
        (img1 - &x.0).is_integer() && (img2 - &x.1).is_integer()
    }

    /// Spectral radius `(|tr| + sqrt(tr^2 - 4 det)) / 2`.
    pub fn spectral_radius(&self, bits: u32) -> Real {
        dominant_root_2x2(&self.trace(), &self.det(), bits)
    }

    /// Topological entropy `log specrad(M)`.
    pub fn entropy(&self, bits: u32) -> Real {
        self.spectral_radius(bits).ln()
    }

    /// `det(I - z M) = 1 - tr z + det z^2`.
    pub fn reversed_charpoly(&self) -> Polynomial {
        Polynomial::from_ints(&self.m.reversed_charpoly())
    }

    /// `(1 - s z)(1 - s det z) / det(I - s z M)` with `s` the sign of the trace.
    pub fn zeta(&self) -> RationalFunction {
        let s = if self.trace().is_negative() { -1 } else { 1 };
        let det = self.det().to_i64().expect("unimodular");
        let num = Polynomial::from_i64(&[1, -s]).mul(&Polynomial::from_i64(&[1, -s * det]));
        let den = self.reversed_charpoly();
        let den = if s < 0 { den.reflect() } else { den };
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// `exp(sum_{n<=order} #Fix(f^n) z^n / n)`.
    pub fn zeta_series(&self, order: usize) -> PowerSeries {
        let mut coeffs = vec![BigRational::zero()];
        for n in 1..=order {
            let count = self.fix_count(n as u64).expect("n >= 1");
            coeffs.push(BigRational::new(count, BigInt::from(n)));
        }
        PowerSeries::new(coeffs).exp().expect("zero constant term")
    }

    /// `(norm, length)`: `t > 1` solves `t + det/t = |tr|`, `norm = t^2`,
    /// `length = log norm`.
    pub fn norm_and_geodesic_length(&self, bits: u32) -> (Real, Real) {
        let t = self.spectral_radius(bits);
        let norm = t.mul(&t);
        let length = t.ln().mul_int(2);
        (norm, length)
    }
}

/// Intersects `range` with `{v : L <= k v <= H}`; false when empty.
fn restrict(range: &mut (Option<BigInt>, Option<BigInt>), k: &BigInt, l: BigInt, h: BigInt) -> bool {
    let (lo, hi) = if k.is_zero() {
        return l <= BigInt::zero() && BigInt::zero() <= h;
    } else if k.is_positive() {
        (l.div_ceil(k), h.div_floor(k))
    } else {
        (h.div_ceil(k), l.div_floor(k))
    };
    let lo = match range.0.take() {
        Some(x) => x.max(lo),
        None => lo,
    };
    let hi = match range.1.take() {
        Some(x) => x.min(hi),
        None => hi,
    };
    let ok = lo <= hi;
    *range = (Some(lo), Some(hi));
    ok
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeCase {
    /// Even length equal to the minimal period.
    A,
    /// Twice an odd minimal period.
    B,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeReport {
    pub prime: bool,
    pub case: PrimeCase,
    /// Even block length the criterion is applied to.
    pub length: usize,
    pub minimal_period: usize,
}

/// Arithmetic primality criterion for the hyperbolic class of a periodic
/// block, read as given (odd blocks are doubled first).
pub fn is_prime_hyperbolic(block: &[u64]) -> PrimeReport {
    assert!(!block.is_empty(), "empty period block");
    let minimal = minimal_period_len(block);
    let len = block.len();
    let (length, case) = if len % 2 == 1 {
        (2 * len, if len == minimal { PrimeCase::B } else { PrimeCase::None })
    } else if len == minimal {
        (len, PrimeCase::A)
    } else if len == 2 * minimal && minimal % 2 == 1 {
        (len, PrimeCase::B)
    } else {
        (len, PrimeCase::None)
    };
    PrimeReport { prime: case != PrimeCase::None, case, length, minimal_period: minimal }
}

/// Criterion applied to the minimal period of an expansion.
pub fn is_prime_hyperbolic_cf(cf: &CFExpansion) -> PrimeReport {
    is_prime_hyperbolic(cf.period())
}
