//! Levy constants `lim (1/n) log q_n`: exact, empirical, Birkhoff, and a
//! Monte Carlo check of the almost-everywhere value `pi^2 / (12 log 2)`.

use num_bigint::{BigInt, RandBigInt};
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cf::{CFExpansion, Convergents};
use crate::error::{LevyError, SurdError};
use crate::genfun::dominant_root_2x2;
use crate::real::{ln_bigint, Real};
use crate::surd::{QuadNumber, QuadraticSurd};

/// Smallest depth the Monte Carlo estimate accepts.
pub const MIN_MONTE_CARLO_DEPTH: usize = 100;

/// `(1/l) log lambda` with `lambda` the dominant root of `N_1`.
pub fn levy_exact(cf: &CFExpansion, bits: u32) -> Real {
    let n1 = cf.n0_n1(1).1;
    dominant_root_2x2(&n1.trace(), &n1.det(), bits).ln().div_int(cf.ell() as i64)
}

/// `(1/n) log q_n`.
pub fn levy_empirical(cf: &CFExpansion, n: usize, bits: u32) -> Result<Real, LevyError> {
    if n < 2 {
        return Err(LevyError::DepthTooSmall { min: 2, got: n });
    }
    let (_, q) = Convergents::new(cf).nth(n).expect("convergents never run out");
    Ok(ln_bigint(&q, bits).div_int(n as i64))
}

/// `-(1/l) sum_{s<l} log T^s(theta^k)` over the periodic orbit.
pub fn levy_birkhoff(cf: &CFExpansion, bits: u32) -> Real {
    let mut x = cf.periodic_part().to_surd();
    let mut acc = Real::zero(bits);
    for _ in 0..cf.ell() {
        acc = acc.add(&x.to_real(bits).ln());
        x = x.gauss_step().expect("orbit stays in (0, 1)").1;
    }
    acc.div_int(-(cf.ell() as i64))
}

#[derive(Clone, Debug)]
pub struct LevyReport {
    pub exact: Real,
    pub empirical: Real,
    pub birkhoff: Real,
    pub depth: usize,
    pub exact_vs_birkhoff: f64,
    pub exact_vs_empirical: f64,
}

pub fn levy_report(cf: &CFExpansion, depth: usize, bits: u32) -> Result<LevyReport, LevyError> {
    let exact = levy_exact(cf, bits);
    let empirical = levy_empirical(cf, depth, bits)?;
    let birkhoff = levy_birkhoff(cf, bits);
    Ok(LevyReport {
        exact_vs_birkhoff: exact.sub(&birkhoff).abs().to_f64(),
        exact_vs_empirical: exact.sub(&empirical).abs().to_f64(),
        exact,
        empirical,
        birkhoff,
        depth,
    })
}

/// Signed intervals `Delta_i = q_i x - p_i` for `i = 0..=n`.
pub fn renorm_intervals(x: &QuadraticSurd, n: usize) -> Result<Vec<QuadNumber>, SurdError> {
    let cf = CFExpansion::expand(x)?;
    let xq = x.to_quad();
    Ok(Convergents::new(&cf)
        .take(n + 1)
        .map(|(p, q)| xq.scale(&q).sub(&QuadNumber::from_integer(&p, x.d())))
        .collect())
}

/// Checks `|Delta_i| / |Delta_0| = prod_{m=1..i} T^m(x)` exactly for `i <= n`.
pub fn renorm_product_identity(x: &QuadraticSurd, n: usize) -> bool {
    let Ok(deltas) = renorm_intervals(x, n) else {
        return false;
    };
    let base = deltas[0].abs();
    let mut product = QuadNumber::from_integer(&BigInt::one(), x.d());
    let mut orbit = x.clone();
    for (i, delta) in deltas.iter().enumerate() {
        if i > 0 {
            orbit = match orbit.gauss_step() {
                Ok((_, next)) => next,
                Err(_) => return false,
            };
            product = product.mul(&orbit.to_quad());
        }
        if delta.abs().div(&base) != product {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloResult {
    pub mean: f64,
    pub stddev: f64,
    pub samples: usize,
    pub depth: usize,
    pub digits: usize,
    pub values: Vec<f64>,
}

/// Denominator length used for a given depth.
pub fn default_digits(depth: usize) -> usize {
    (1.8 * depth as f64).ceil() as usize
}

pub fn levy_ae_montecarlo(samples: usize, depth: usize, seed: u64) -> Result<MonteCarloResult, LevyError> {
    levy_ae_montecarlo_with_digits(samples, depth, seed, default_digits(depth))
}

/// Averages `(1/depth) log q_depth` over uniform rationals `P/Q` with
/// `digits`-digit denominators, expanded by the exact Euclidean algorithm.
/// Sample `i` draws from its own ChaCha stream, so thread scheduling does
/// not affect the result.
pub fn levy_ae_montecarlo_with_digits(
    samples: usize,
    depth: usize,
    seed: u64,
    digits: usize,
) -> Result<MonteCarloResult, LevyError> {
    if samples == 0 {
        return Err(LevyError::NoSamples);
    }
    if depth < MIN_MONTE_CARLO_DEPTH {
        return Err(LevyError::DepthTooSmall { min: MIN_MONTE_CARLO_DEPTH, got: depth });
    }
    // typical expansions of P/Q last about (12 log 2 / pi^2) log Q terms
    let needed = 1.5 * depth as f64 * (1.19f64.exp()).log10();
    if (digits as f64) < needed {
        return Err(LevyError::DenominatorTooShort { digits, depth, needed });
    }
    let values: Vec<f64> = (0..samples).into_par_iter().map(|i| sample_levy(seed, i as u64, depth, digits)).collect();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let stddev = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(MonteCarloResult { mean, stddev, samples, depth, digits, values })
}

fn sample_levy(seed: u64, stream: u64, depth: usize, digits: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let low = BigInt::from(10u32).pow(digits as u32 - 1);
    let high = &low * 10;
    loop {
        let den = rng.gen_bigint_range(&low, &high);
        let num = rng.gen_bigint_range(&BigInt::one(), &den);
        if let Some(q) = euclid_denominator(num, den, depth) {
            return ln_big_f64(&q) / depth as f64;
        }
    }
}

/// `q_depth` of `num/den`, or `None` if the expansion ends first.
fn euclid_denominator(mut num: BigInt, mut den: BigInt, depth: usize) -> Option<BigInt> {
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    for _ in 0..depth {
        if num.is_zero() {
            return None;
        }
        let (a, r) = num_integer::Integer::div_rem(&den, &num);
        let next = &a * &q + &q_prev;
        q_prev = std::mem::replace(&mut q, next);
        den = std::mem::replace(&mut num, r);
    }
    Some(q)
}

fn ln_big_f64(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 1000 {
        use num_traits::ToPrimitive;
        return x.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    use num_traits::ToPrimitive;
    let top = (x >> shift).to_f64().expect("64 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
