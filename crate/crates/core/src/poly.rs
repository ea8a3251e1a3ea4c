//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients indexed by degree; never carries a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Polynomial::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn from_int_vec(coeffs: Vec<BigInt>) -> Self {
        Polynomial::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c z^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::new(coeffs)
    }

    pub fn z() -> Self {
        Polynomial::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest-order nonzero coefficient.
    pub fn trailing(&self) -> BigRational {
        self.coeffs.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        if self.is_integral() && other.is_integral() {
            let zero = BigInt::zero();
            let (a, b) = (&self.coeffs, &other.coeffs);
            return Polynomial::from_int_vec(
                (0..n).map(|i| a.get(i).map_or(&zero, |c| c.numer()) + b.get(i).map_or(&zero, |c| c.numer())).collect(),
            );
        }
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        if self.is_integral() && other.is_integral() {
            // skip the per-term gcds of rational arithmetic
            let a: Vec<&BigInt> = self.coeffs.iter().map(|c| c.numer()).collect();
            let b: Vec<(usize, &BigInt)> =
                other.coeffs.iter().map(|c| c.numer()).enumerate().filter(|(_, c)| !c.is_zero()).collect();
            let mut out = vec![BigInt::zero(); len];
            for (i, x) in a.into_iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for &(j, y) in &b {
                    out[i + j] += x * y;
                }
            }
            return Polynomial::from_int_vec(out);
        }
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        if k.is_integer() && self.is_integral() {
            return Polynomial::from_int_vec(self.coeffs.iter().map(|c| c.numer() * k.numer()).collect());
        }
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `z^n`.
    pub fn shift(&self, n: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Substitutes `z -> z^m`.
    pub fn compose_power(&self, m: usize) -> Polynomial {
        assert!(m >= 1);
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Polynomial::new(coeffs)
    }

    /// Substitutes `z -> -z`.
    pub fn reflect(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if sd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Quotient of an exact division. Panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        if let Some(q) = self.exact_div_integral(divisor) {
            return q;
        }
        // quotient may still exist over Q
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Exact division in Z[z]; `None` when the division is not exact there.
    fn exact_div_integral(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (mut rem, d) = (self.to_ints()?, divisor.to_ints()?);
        let dd = d.len().checked_sub(1).expect("division by the zero polynomial");
        if rem.is_empty() {
            return Some(Polynomial::zero());
        }
        if rem.len() <= dd {
            return None;
        }
        let lead = &d[dd];
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let (c, r) = rem[i + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Polynomial::from_ints(&quot))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Primitive gcd: integer coefficients with content 1 and positive leading coefficient.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let a = clear_denominators(self);
        let b = clear_denominators(other);
        if coprime_mod_prime(&a, &b) {
            return Polynomial::one();
        }
        if a.len().min(b.len()) > SUBRESULTANT_MAX_LEN {
            return Polynomial::from_ints(&modular_gcd(&a, &b));
        }
        Polynomial::from_ints(&subresultant_gcd(&a, &b))
    }
}

fn clear_denominators(p: &Polynomial) -> Vec<BigInt> {
    let l = p.denominator_lcm();
    if l.is_one() {
        return p.coeffs.iter().map(|c| c.numer().clone()).collect();
    }
    p.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p {
        acc = acc.gcd(c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().is_some_and(|x| x.is_negative()) { -c } else { c };
    p.iter().map(|x| x / &sign).collect()
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Above this length the subresultant sequence is replaced by the modular
/// algorithm; its intermediate coefficients grow too fast.
const SUBRESULTANT_MAX_LEN: usize = 24;

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn reduce(p: &[BigInt], m: u64) -> Vec<u64> {
    let big = BigInt::from(m);
    let mut v: Vec<u64> = p.iter().map(|c| c.mod_floor(&big).to_u64().expect("reduced")).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over `Z/p`; inputs nonzero.
fn gcd_mod(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> Vec<u64> {
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let inv = inv_mod(*y.last().unwrap(), p);
        while x.len() >= y.len() {
            let c = mul_mod(*x.last().unwrap(), inv, p);
            let shift = x.len() - y.len();
            for (j, &yj) in y.iter().enumerate() {
                x[shift + j] = (x[shift + j] + p - mul_mod(c, yj, p)) % p;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    let inv = inv_mod(*x.last().unwrap(), p);
    x.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Sufficient test for `gcd(a, b) = 1`: if the prime divides neither leading
/// coefficient, the gcd over Z has degree at most the gcd mod the prime.
fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    let (x, y) = (reduce(a, PRIME), reduce(b, PRIME));
    if x.len() != a.len() || y.len() != b.len() || x.is_empty() || y.is_empty() {
        return false;
    }
    gcd_mod(x, y, PRIME).len() == 1
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

/// Primitive gcd of two nonzero integer polynomials: images modulo 61-bit
/// primes are combined by CRT until the candidate stops changing and divides
/// both inputs.
fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = (primitive_part(&trim(a.to_vec())), primitive_part(&trim(b.to_vec())));
    let (la, lb) = (a.last().unwrap(), b.last().unwrap());
    // the gcd's leading coefficient divides this, so scaled images lift
    let lc = la.gcd(lb);
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut previous: Option<Vec<BigInt>> = None;
    let mut p = PRIME;
    loop {
        p -= 2;
        while !is_prime_u64(p) {
            p -= 2;
        }
        let big_p = BigInt::from(p);
        if (la % &big_p).is_zero() || (lb % &big_p).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce(&a, p), reduce(&b, p), p);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        if !acc.is_empty() && g.len() > acc.len() {
            continue; // unlucky prime
        }
        let scale = lc.mod_floor(&big_p).to_u64().unwrap();
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if acc.is_empty() || g.len() < acc.len() {
            // first image, or every earlier prime was unlucky
            acc = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = big_p;
            previous = None;
            continue;
        }
        let m_inv = BigInt::from(inv_mod(modulus.mod_floor(&big_p).to_u64().unwrap(), p));
        for (c, &r) in acc.iter_mut().zip(&g) {
            let t = ((BigInt::from(r) - &*c) * &m_inv).mod_floor(&big_p);
            *c += &modulus * t;
        }
        modulus *= &big_p;
        let candidate: Vec<BigInt> = acc.iter().map(|c| symmetric(c, &modulus)).collect();
        if previous.as_ref() == Some(&candidate) {
            let g = primitive_part(&candidate);
            let gp = Polynomial::from_ints(&g);
            let divides = |x: &[BigInt]| Polynomial::from_ints(x).exact_div_integral(&gp).is_some();
            if divides(&a) && divides(&b) {
                return g;
            }
        }
        previous = Some(candidate);
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - b.len() + 1;
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top].clone();
        for x in r.iter_mut() {
            *x *= lead;
        }
        for (j, bj) in b.iter().enumerate() {
            r[top - db + j] -= &c * bj;
        }
        r = trim(r);
        steps -= 1;
    }
    // the missing powers keep the result an honest pseudo-remainder
    let scale = num_traits::pow(lead.clone(), steps);
    r.iter().map(|x| x * &scale).collect()
}

/// Subresultant polynomial remainder sequence; returns the primitive gcd.
fn subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = (trim(a.to_vec()), trim(b.to_vec()));
    if a.is_empty() {
        return primitive_part(&b);
    }
    if b.is_empty() {
        return primitive_part(&a);
    }
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    a = primitive_part(&a);
    b = primitive_part(&b);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return primitive_part(&b);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        a = b;
        b = r.iter().map(|x| x / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h.clone(), delta as usize - 1)
        };
    }
}

pub(crate) fn fmt_terms(coeffs: &[BigRational], var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let mag_str = if mag.is_integer() { mag.to_integer().to_string() } else { format!("({mag})") };
        match i {
            0 => write!(f, "{mag_str}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag_str}")?;
                }
                write!(f, "{var}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(&self.coeffs, "z", f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 1]).mul(&p(&[1, -1])), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 2, 3]).add(&p(&[0, 0, -3])), p(&[1, 2]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
        assert_eq!(p(&[1, -1]).compose_power(3), p(&[1, 0, 0, -1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!((q, r), (p(&[1, 1, 1]), Polynomial::zero()));
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, Polynomial::new(vec![BigRational::zero(), BigRational::new(1.into(), 2.into())]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn gcds() {
        // (1 - z)(1 + z) and (1 - z)^2 share 1 - z, reported with positive leading coefficient
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
        assert_eq!(p(&[1, -1, -1]).gcd(&p(&[1, -2, -1])), p(&[1]));
        let f = p(&[2, 3, 1]).mul(&p(&[1, 0, 5, 7]));
        let g = p(&[2, 3, 1]).mul(&p(&[-4, 1, 0, 0, 2]));
        assert_eq!(f.gcd(&g), p(&[2, 3, 1]));
        assert_eq!(p(&[0, 6]).gcd(&Polynomial::zero()), p(&[0, 1]));
    }

    #[test]
    fn gcd_with_degree_jumps() {
        // classic Knuth example; the gcd is 1
        let f = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let g = p(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(f.gcd(&g), p(&[1]));
        let common = p(&[3, 0, 0, 1]);
        assert_eq!(f.mul(&common).gcd(&g.mul(&common)), common);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -1, -1]).to_string(), "1 - z - z^2");
        assert_eq!(p(&[2, -1]).to_string(), "2 - z");
        assert_eq!(p(&[0, 3, 0, -2]).to_string(), "3z - 2z^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn modular_and_subresultant_gcd_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut rand_poly = |deg: usize, size: i64| -> Vec<BigInt> {
            let mut v: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-size..=size))).collect();
            v.push(BigInt::from(rng.gen_range(1..=size)));
            v
        };
        for case in 0..40 {
            let g = rand_poly(case % 7, 1000);
            let a = Polynomial::from_ints(&rand_poly(5 + case % 4, 50)).mul(&Polynomial::from_ints(&g));
            let b = Polynomial::from_ints(&rand_poly(3 + case % 5, 50)).mul(&Polynomial::from_ints(&g));
            let (ai, bi) = (a.to_ints().unwrap(), b.to_ints().unwrap());
            let sub = subresultant_gcd(&ai, &bi);
            assert_eq!(modular_gcd(&ai, &bi), sub, "case {case}");
            assert!(sub.len() >= g.len() || g.len() == 1);
        }
        // large degree with a shared factor, where only the modular path is practical
        let f = Polynomial::from_i64(&[1, 1, 1]);
        let big = Polynomial::from_ints(&rand_poly(300, 1_000_000_000));
        let other = Polynomial::from_ints(&rand_poly(280, 1_000_000_000));
        let g = big.mul(&f).gcd(&other.mul(&f));
        assert_eq!(g, f);
    }

    #[test]
    fn integral_exact_division() {
        let a = p(&[2, 3, 1]).mul(&p(&[-5, 0, 7]));
        assert_eq!(a.exact_div(&p(&[2, 3, 1])), p(&[-5, 0, 7]));
        assert_eq!(p(&[1, 0, 1]).exact_div_integral(&p(&[1, 1])), None);
        // quotient with a rational coefficient still works
        assert_eq!(p(&[1, 2]).exact_div(&p(&[2])), Polynomial::new(vec![BigRational::new(1.into(), 2.into()), BigRational::one()]));
        assert!(is_prime_u64(PRIME) && is_prime_u64(97) && !is_prime_u64(91) && !is_prime_u64(561));
    }
}
