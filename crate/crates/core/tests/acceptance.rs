//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use cfzeta::genfun::{direct_series, generating_vector, radius_of_convergence, shift_identity_check};
use cfzeta::levy::{levy_ae_montecarlo, levy_birkhoff, levy_empirical, levy_exact};
use cfzeta::real::{levy_khinchin_reference, ln_bigint};
use cfzeta::zetaid::{det_v, det_v_formula, main_identity_check};
use cfzeta::{CFExpansion, IntMatrix, Polynomial, QuadraticSurd, RationalFunction, ToralAutomorphism};
use common::{cf, corpus};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, check, and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_i64(num), Polynomial::from_i64(den)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closed_form_matches(cfs: &[CFExpansion], levels: &[usize], order: usize) -> Outcome {
    let mut checked = 0;
    for c in cfs {
        for &r in levels {
            let v = generating_vector(c, r).map_err(|e| format!("{c}: {e}"))?;
            for s in 0..=r {
                let got = v.get(s).series(order).map_err(|e| e.to_string())?;
                let want = direct_series(c, r, s, order).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{c}, r = {r}, s = {s}: series differ"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} series agree to order {order}"))
}

fn c1_closed_form() -> Outcome {
    closed_form_matches(&corpus(), &[1], 40)
}

fn c2_higher_powers() -> Outcome {
    closed_form_matches(&corpus(), &[2, 3], 30)
}

fn c3_identity() -> Outcome {
    let cfs = corpus();
    for c in &cfs {
        let rep = main_identity_check(c, 30).map_err(|e| format!("{c}: {e}"))?;
        ensure(rep.equal_exact && rep.series_equal, || format!("{c}: sides differ, witness {:?}", rep.witness))?;
    }
    let golden = main_identity_check(&cf(&[], &[1]), 30).unwrap();
    let expected = rf(&[2, -1], &[1, -1, -1]);
    ensure(golden.lhs == expected && golden.rhs == expected, || format!("golden ratio: {} and {}", golden.lhs, golden.rhs))?;
    Ok(format!("{} expansions, golden ratio gives {}", cfs.len(), expected))
}

/// Canonical maps: the cat map and the maps of the three canonical expansions.
fn canonical_maps() -> Vec<ToralAutomorphism> {
    let mut maps = vec![ToralAutomorphism::from_i64(2, 1, 1, 1).unwrap()];
    maps.extend([cf(&[], &[1]), cf(&[], &[2]), cf(&[1], &[2])].iter().map(ToralAutomorphism::from_quadratic));
    maps
}

/// Ten distinct seeded hyperbolic matrices with `|trace| <= 4`.
fn random_maps() -> Vec<ToralAutomorphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7015);
    let mut out: Vec<ToralAutomorphism> = Vec::new();
    while out.len() < 10 {
        let mut m = IntMatrix::identity(2);
        for _ in 0..rng.gen_range(1..6) {
            let k = rng.gen_range(-3i64..=3);
            let e = match rng.gen_range(0..3) {
                0 => IntMatrix::from_i64(&[&[1, k], &[0, 1]]),
                1 => IntMatrix::from_i64(&[&[1, 0], &[k, 1]]),
                _ => IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            };
            m = &m * &e;
        }
        let Ok(f) = ToralAutomorphism::new(m) else { continue };
        if f.trace() <= BigInt::from(4) && f.trace() >= BigInt::from(-4) && out.iter().all(|g| g.matrix() != f.matrix()) {
            out.push(f);
        }
    }
    out
}

fn c4_fixed_points() -> Outcome {
    let maps: Vec<_> = canonical_maps().into_iter().chain(random_maps()).collect();
    let mut total = BigInt::from(0);
    for f in &maps {
        for n in 1..=8 {
            let points = f.fix_points_bruteforce(n).map_err(|e| format!("{}: {e}", f.matrix()))?;
            let count = f.fix_count(n).unwrap();
            ensure(BigInt::from(points.len()) == count, || {
                format!("{} n = {n}: enumerated {} vs |det(I - M^n)| = {count}", f.matrix(), points.len())
            })?;
            total += count;
        }
    }
    let cat = &maps[0];
    ensure(cat.fix_count(4).unwrap() == BigInt::from(45), || "cat map n = 4".into())?;
    Ok(format!("{} maps, {total} points enumerated; cat map n = 4 gives 45", maps.len()))
}

fn c5_entropy() -> Outcome {
    let mut worst = 0f64;
    for c in &corpus() {
        let f = ToralAutomorphism::from_quadratic(c);
        let (_, n1) = c.n0_n1(1);
        ensure(f.matrix().charpoly() == n1.charpoly(), || format!("{c}: characteristic polynomials differ"))?;
        let lhs = f.entropy(160);
        let rhs = levy_exact(c, 160).mul_int(c.ell() as i64);
        let rel = lhs.relative_difference(&rhs);
        worst = worst.max(rel);
        ensure(rel < 2f64.powi(-40), || format!("{c}: relative difference {rel:e}"))?;
    }
    Ok(format!("worst relative difference {worst:e}"))
}

fn c6_radius() -> Outcome {
    let n = 200;
    let mut worst = 0f64;
    for c in &corpus() {
        let (_, q) = c.convergents(n + 1).pop().unwrap();
        // c_N = q_N at level 1, s = 1
        let estimate = (-ln_bigint(&q, 96).to_f64() / n as f64).exp();
        let radius = radius_of_convergence(c, 1, 96).unwrap().to_f64();
        let dev = (estimate / radius - 1.0).abs();
        worst = worst.max(dev);
        ensure(dev < 0.05, || format!("{c}: estimate {estimate} vs radius {radius}"))?;
    }
    let golden = radius_of_convergence(&cf(&[], &[1]), 1, 96).unwrap().to_f64();
    ensure((golden - 0.618_034).abs() < 1e-6, || format!("golden radius {golden}"))?;
    Ok(format!("worst deviation {:.3}%, golden ratio radius {golden:.6}", 100.0 * worst))
}

fn c7_levy() -> Outcome {
    let (mut worst_b, mut worst_e) = (0f64, 0f64);
    for c in &corpus() {
        let exact = levy_exact(c, 160);
        let b = exact.sub(&levy_birkhoff(c, 160)).abs().to_f64();
        let e = exact.sub(&levy_empirical(c, 10_000, 128).unwrap()).abs().to_f64();
        worst_b = worst_b.max(b);
        worst_e = worst_e.max(e);
        ensure(b < 2f64.powi(-40), || format!("{c}: birkhoff off by {b:e}"))?;
        ensure(e < 1e-3, || format!("{c}: empirical off by {e:e}"))?;
    }
    let silver = levy_exact(&cf(&[], &[2]), 128).to_f64();
    ensure((silver - 0.881_374).abs() < 5e-7, || format!("[;(2)] gives {silver}"))?;
    Ok(format!("birkhoff within {worst_b:e}, empirical within {worst_e:e}, [;(2)] gives {silver:.6}"))
}

fn c8_montecarlo() -> Outcome {
    let res = levy_ae_montecarlo(100, 500, 1).map_err(|e| e.to_string())?;
    let reference = levy_khinchin_reference();
    let rel = (res.mean - reference).abs() / reference;
    ensure(rel < 0.02, || format!("mean {} vs {reference}", res.mean))?;
    Ok(format!("mean {:.5} (sd {:.4}) vs {reference:.5}, {:.2}% off", res.mean, res.stddev, 100.0 * rel))
}

fn c9_det_v() -> Outcome {
    let cfs = corpus();
    for c in &cfs {
        ensure(det_v(c) == det_v_formula(c), || format!("{c}: {} vs {}", det_v(c), det_v_formula(c)))?;
    }
    let golden = det_v(&cf(&[], &[1]));
    ensure(golden == Polynomial::from_i64(&[-1]), || format!("period [1] gives {golden}"))?;
    Ok(format!("{} expansions, period [1] gives {golden}", cfs.len()))
}

/// Seeded surds `(p + sqrt d) / q` reduced into (0, 1).
fn random_surds(count: usize) -> Vec<QuadraticSurd> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5u64);
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(2i64..500);
        let p = rng.gen_range(-50i64..50);
        let q = rng.gen_range(1i64..30) * if rng.gen_bool(0.5) { -1 } else { 1 };
        if let Ok(x) = QuadraticSurd::from_i64(p, q, d) {
            out.push(x.split_integer().1);
        }
    }
    out
}

fn c10_shift() -> Outcome {
    let surds = random_surds(100);
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    for x in &surds {
        let m = rng.gen_range(1..=5);
        let r = rng.gen_range(1..=3);
        let rep = shift_identity_check(x, m, r, 20).map_err(|e| format!("{x}: {e}"))?;
        ensure(rep.passed(), || format!("{x}, m = {m}, r = {r}: {:?}", rep.mismatch))?;
        let c = CFExpansion::expand(x).unwrap();
        for (p, q) in c.convergents(21) {
            ensure(p.gcd(&q).is_one(), || format!("{x}: gcd({p}, {q}) != 1"))?;
        }
    }
    Ok(format!("{} surds, identities exact and convergents coprime", surds.len()))
}

fn c11_zeta() -> Outcome {
    let maps: Vec<_> = canonical_maps().into_iter().chain(random_maps()).collect();
    for f in &maps {
        let closed = f.zeta().series(30).map_err(|e| e.to_string())?;
        ensure(closed == f.zeta_series(30), || format!("{}: series differ", f.matrix()))?;
    }
    let cat = maps[0].zeta();
    let expected = rf(&[1, -2, 1], &[1, -3, 1]);
    ensure(cat == expected, || format!("cat map zeta {cat}"))?;
    Ok(format!("{} maps to order 30, cat map zeta = {cat}", maps.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("1 closed form, r = 1, order 40", c1_closed_form, Some(5)),
        ("2 higher powers, r = 2, 3, order 30", c2_higher_powers, Some(30)),
        ("3 traced zeta identity", c3_identity, Some(10)),
        ("4 fixed points = |det(I - M^n)|", c4_fixed_points, Some(10)),
        ("5 entropy = l * Levy constant", c5_entropy, None),
        ("6 radius of convergence", c6_radius, None),
        ("7 Levy constant three ways", c7_levy, None),
        ("8 Monte Carlo Levy-Khinchin", c8_montecarlo, Some(60)),
        ("9 det V expansion", c9_det_v, None),
        ("10 shift identities", c10_shift, None),
        ("11 zeta closed form", c11_zeta, None),
    ];
    let mut failed = Vec::new();
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(secs)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("took {:.2} s, limit {secs} s", elapsed.as_secs_f64()));
            }
        }
        match &outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({:.2} s)", elapsed.as_secs_f64()),
            Err(why) => {
                println!("FAIL [{name}] {why} ({:.2} s)", elapsed.as_secs_f64());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
