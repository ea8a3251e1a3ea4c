//! Arbitrary-precision binary floating point.
//!
//! Just enough of a real-number type to report spectral radii, logarithms
//! and surd values to a caller-chosen number of bits. A `Real` is
//! `mantissa * 2^exponent` with `|mantissa| < 2^precision`; every operation
//! truncates toward zero, so each result carries at most one ulp of error
//! relative to its inputs.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extra bits carried internally by the transcendental functions.
const GUARD_BITS: u32 = 24;

#[derive(Clone, Debug)]
pub struct Real {
    mantissa: BigInt,
    exponent: i64,
    precision: u32,
}

fn bit_len(x: &BigInt) -> i64 {
    x.bits() as i64
}

impl Real {
    pub fn zero(precision: u32) -> Self {
        Real { mantissa: BigInt::zero(), exponent: 0, precision }
    }

    pub fn from_bigint(value: &BigInt, precision: u32) -> Self {
        Real::from_parts(value.clone(), 0, precision)
    }

    pub fn from_i64(value: i64, precision: u32) -> Self {
        Real::from_bigint(&BigInt::from(value), precision)
    }

    /// `num / den`, truncated to `precision` bits.
    pub fn from_ratio(num: &BigInt, den: &BigInt, precision: u32) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Real::zero(precision);
        }
        let shift = precision as i64 + 2 + bit_len(den) - bit_len(num);
        let scaled = if shift >= 0 { num << shift as usize } else { num >> (-shift) as usize };
        let q = &scaled / den;
        Real::from_parts(q, -shift, precision)
    }

    /// Converts an `f64` exactly (then rounds to `precision`).
    pub fn from_f64(value: f64, precision: u32) -> Self {
        assert!(value.is_finite());
        if value == 0.0 {
            return Real::zero(precision);
        }
        let bits = value.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), raw_exp - 1075) };
        Real::from_parts(BigInt::from(m) * sign, e, precision)
    }

    fn from_parts(mantissa: BigInt, exponent: i64, precision: u32) -> Self {
        let mut r = Real { mantissa, exponent, precision };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let excess = bit_len(&self.mantissa) - self.precision as i64;
        if excess > 0 {
            // truncate toward zero
            let neg = self.mantissa.is_negative();
            let mag = self.mantissa.magnitude() >> excess as usize;
            self.mantissa = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, mag);
            self.exponent += excess;
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Real::from_parts(self.mantissa.clone(), self.exponent, precision)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Binary exponent of the leading bit: `2^(e-1) <= |x| < 2^e`.
    pub fn magnitude_exponent(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + bit_len(&self.mantissa)
        }
    }

    pub fn abs(&self) -> Self {
        Real { mantissa: self.mantissa.abs(), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        Real { mantissa: -&self.mantissa, ..self.clone() }
    }

    pub fn add(&self, other: &Real) -> Real {
        let precision = self.precision.max(other.precision);
        if self.is_zero() {
            return other.with_precision(precision);
        }
        if other.is_zero() {
            return self.with_precision(precision);
        }
        // a summand far below the last kept bit only matters through truncation
        let gap = (self.magnitude_exponent() - other.magnitude_exponent()).abs();
        if gap > precision as i64 + 4 {
            let big = if self.magnitude_exponent() > other.magnitude_exponent() { self } else { other };
            return big.with_precision(precision);
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        Real::from_parts(a + b, e, precision)
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Real) -> Real {
        let precision = self.precision.max(other.precision);
        Real::from_parts(&self.mantissa * &other.mantissa, self.exponent + other.exponent, precision)
    }

    pub fn mul_int(&self, k: i64) -> Real {
        Real::from_parts(&self.mantissa * k, self.exponent, self.precision)
    }

    pub fn div(&self, other: &Real) -> Real {
        assert!(!other.is_zero(), "division by zero");
        let precision = self.precision.max(other.precision);
        if self.is_zero() {
            return Real::zero(precision);
        }
        let shift = precision as i64 + 2 + bit_len(&other.mantissa) - bit_len(&self.mantissa);
        let shift = shift.max(0);
        let num = &self.mantissa << shift as usize;
        Real::from_parts(num / &other.mantissa, self.exponent - other.exponent - shift, precision)
    }

    pub fn div_int(&self, k: i64) -> Real {
        self.div(&Real::from_i64(k, self.precision))
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Real {
        Real { exponent: self.exponent + k, ..self.clone() }
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return self.clone();
        }
        let precision = self.precision;
        // want result with `precision + 2` bits: radicand gets twice that
        let target = 2 * (precision as i64 + 2);
        let mut shift = (target - bit_len(&self.mantissa)).max(0);
        if (self.exponent - shift).is_odd() {
            shift += 1;
        }
        let m = (&self.mantissa << shift as usize).sqrt();
        Real::from_parts(m, (self.exponent - shift) / 2, precision)
    }

    /// Natural logarithm of a positive number.
    pub fn ln(&self) -> Real {
        assert!(self.signum() > 0, "logarithm of a non-positive number");
        let precision = self.precision;
        let work = precision + GUARD_BITS;
        // x = m * 2^e with m in [1, 2)
        let e = self.magnitude_exponent() - 1;
        let m = self.with_precision(work).ldexp(-e);
        let ln_m = ln_near_one(&m, work);
        let result = ln2(work).mul_int(e).add(&ln_m);
        result.with_precision(precision)
    }

    pub fn exp(&self) -> Real {
        let precision = self.precision;
        let work = precision + GUARD_BITS + (self.magnitude_exponent().max(0) as u32);
        let x = self.with_precision(work);
        let l2 = ln2(work);
        // x = k ln2 + r, |r| <= ln2 / 2
        let k = x.div(&l2).round_to_int();
        let r = x.sub(&l2.mul(&Real::from_bigint(&k, work)));
        // further scale r down by 2^8 and square back up
        let halvings = 8;
        let r = r.ldexp(-halvings);
        let mut term = Real::from_i64(1, work);
        let mut sum = Real::from_i64(1, work);
        let mut n = 1i64;
        loop {
            term = term.mul(&r).div_int(n);
            if term.is_zero() || term.magnitude_exponent() < sum.magnitude_exponent() - work as i64 - 2 {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        let k = k.to_i64().expect("exponent out of range");
        sum.ldexp(k).with_precision(precision)
    }

    /// Nearest integer (ties away from zero).
    pub fn round_to_int(&self) -> BigInt {
        let half = Real::from_f64(0.5, self.precision.max(8));
        let shifted = if self.is_negative() { self.sub(&half) } else { self.add(&half) };
        shifted.trunc()
    }

    /// Integer part, rounding toward zero.
    pub fn trunc(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as usize
        } else {
            let neg = self.mantissa.is_negative();
            let mag = self.mantissa.magnitude() >> (-self.exponent) as usize;
            BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, mag)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let excess = (bit_len(&self.mantissa) - 64).max(0);
        let m = (&self.mantissa >> excess as usize).to_f64().unwrap_or(f64::NAN);
        let e = self.exponent + excess;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        // split so that neither factor over- or underflows on its own
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    /// Decimal rendering with `digits` digits after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = if self.exponent >= 0 {
            (&self.mantissa << self.exponent as usize) * &scale
        } else {
            let num = &self.mantissa * &scale;
            let den = BigInt::one() << (-self.exponent) as usize;
            // round half away from zero
            let two = BigInt::from(2);
            let twice = (num.abs() * &two + &den) / (den * &two);
            if self.is_negative() {
                -twice
            } else {
                twice
            }
        };
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// `|self - other| / |other|`, as an `f64`.
    pub fn relative_difference(&self, other: &Real) -> f64 {
        let diff = self.sub(other).abs();
        if other.is_zero() {
            return diff.to_f64();
        }
        diff.div(&other.abs()).to_f64()
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Real {
    pub fn cmp_value(&self, other: &Real) -> Ordering {
        let d = self.sub(other);
        d.signum().cmp(&0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // decimal digits worth of the binary precision
        let digits = f.precision().unwrap_or(((self.precision as f64) * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_decimal(digits))
    }
}

/// `ln(m)` for `m` in `[1, 2)` via `2 atanh((m-1)/(m+1))`.
fn ln_near_one(m: &Real, work: u32) -> Real {
    let one = Real::from_i64(1, work);
    let t = m.sub(&one).div(&m.add(&one));
    atanh_series(&t, work).mul_int(2)
}

fn atanh_series(t: &Real, work: u32) -> Real {
    if t.is_zero() {
        return Real::zero(work);
    }
    let t2 = t.mul(t);
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1i64;
    loop {
        power = power.mul(&t2);
        let term = power.div_int(2 * k + 1);
        if term.is_zero() || term.magnitude_exponent() < sum.magnitude_exponent() - work as i64 - 2 {
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    sum
}

/// `ln 2 = 2 atanh(1/3)`.
pub fn ln2(precision: u32) -> Real {
    let third = Real::from_ratio(&BigInt::one(), &BigInt::from(3), precision + 8);
    atanh_series(&third, precision + 8).mul_int(2).with_precision(precision)
}

/// Natural log of a positive big integer.
pub fn ln_bigint(x: &BigInt, precision: u32) -> Real {
    // rounding x to p bits moves ln x by at most 2^-p
    Real::from_bigint(x, precision + 8).ln().with_precision(precision)
}

/// `pi^2 / (12 ln 2)` from the Basel-type identity; used only as a reference value.
pub fn levy_khinchin_reference() -> f64 {
    std::f64::consts::PI * std::f64::consts::PI / (12.0 * std::f64::consts::LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn ln_matches_f64() {
        for &x in &[0.001, 0.5, 1.0, 1.5, 2.0, 3.0, 10.0, 12345.678] {
            let r = Real::from_f64(x, 128).ln();
            assert!(close(r.to_f64(), x.ln(), 1e-15), "ln({x}) = {}", r.to_f64());
        }
    }

    #[test]
    fn exp_matches_f64() {
        for &x in &[-20.0, -1.0, -0.25, 0.0, 0.3, 1.0, 5.5, 40.0] {
            let r = Real::from_f64(x, 128).exp();
            assert!(close(r.to_f64(), x.exp(), 1e-14), "exp({x}) = {}", r.to_f64());
        }
    }

    #[test]
    fn ln2_digits() {
        assert_eq!(ln2(200).to_decimal(40), "0.6931471805599453094172321214581765680755");
    }

    #[test]
    fn exp_ln_round_trip_high_precision() {
        let x = Real::from_ratio(&BigInt::from(7), &BigInt::from(3), 256);
        let back = x.ln().exp();
        assert!(back.relative_difference(&x) < 1e-70);
    }

    #[test]
    fn ln_is_additive() {
        let a = Real::from_ratio(&BigInt::from(355), &BigInt::from(113), 300);
        let b = Real::from_i64(1 << 20, 300).add(&Real::from_i64(3, 300));
        let lhs = a.mul(&b).ln();
        let rhs = a.ln().add(&b.ln());
        assert!(lhs.sub(&rhs).abs().to_f64() < 1e-80);
    }

    #[test]
    fn sqrt_of_two() {
        let s = Real::from_i64(2, 200).sqrt();
        assert_eq!(s.to_decimal(30), "1.414213562373095048801688724210");
        assert!(Real::from_i64(4, 64).sqrt() == Real::from_i64(2, 64));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Real::from_f64(-0.125, 64).to_decimal(3), "-0.125");
        assert_eq!(Real::from_i64(42, 64).to_decimal(0), "42");
        assert_eq!(Real::from_f64(0.0049, 64).to_decimal(2), "0.00");
    }

    #[test]
    fn round_and_trunc() {
        assert_eq!(Real::from_f64(2.5, 64).round_to_int(), BigInt::from(3));
        assert_eq!(Real::from_f64(-2.5, 64).round_to_int(), BigInt::from(-3));
        assert_eq!(Real::from_f64(-2.7, 64).trunc(), BigInt::from(-2));
    }
}
