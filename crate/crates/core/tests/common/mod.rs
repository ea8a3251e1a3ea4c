#![allow(dead_code)]

use cfzeta::surd::is_perfect_square;
use cfzeta::{CFExpansion, IntMatrix, QuadraticSurd};
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

pub fn cf(pre: &[u64], per: &[u64]) -> CFExpansion {
    CFExpansion::new(pre.to_vec(), per.to_vec()).unwrap()
}

/// Expansions with `k <= max_k`, `l <= max_l` (before reduction) and
/// quotients in `1..=max_a`.
pub fn arb_cf(max_k: usize, max_l: usize, max_a: u64) -> impl Strategy<Value = CFExpansion> {
    (vec(1..=max_a, 0..=max_k), vec(1..=max_a, 1..=max_l)).prop_map(|(pre, per)| CFExpansion::new(pre, per).unwrap())
}

/// Surds in (0, 1) built from random `(p, q, d)`.
pub fn arb_surd() -> impl Strategy<Value = QuadraticSurd> {
    (-200i64..200, 1i64..60, any::<bool>(), 2i64..3000)
        .prop_filter("non-square radicand", |&(_, _, _, d)| !is_perfect_square(&BigInt::from(d)))
        .prop_map(|(p, q, neg, d)| {
            let q = if neg { -q } else { q };
            QuadraticSurd::from_i64(p, q, d).unwrap().split_integer().1
        })
}

/// Products of elementary integer matrices, determinant +-1.
pub fn arb_unimodular() -> impl Strategy<Value = IntMatrix> {
    vec((0u8..3, -3i64..=3), 1..6).prop_map(|ops| {
        let mut u = IntMatrix::identity(2);
        for (kind, k) in ops {
            let e = match kind {
                0 => IntMatrix::from_i64(&[&[1, k], &[0, 1]]),
                1 => IntMatrix::from_i64(&[&[1, 0], &[k, 1]]),
                _ => IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
            };
            u = &u * &e;
        }
        u
    })
}

/// The canonical three expansions plus 50 seeded random ones with
/// `k, l <= 4` and quotients `<= 9`.
pub fn corpus() -> Vec<CFExpansion> {
    use rand::{Rng, SeedableRng};
    let mut out = vec![cf(&[], &[1]), cf(&[], &[2]), cf(&[1], &[2])];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let k = rng.gen_range(0..=4);
        let l = rng.gen_range(1..=4);
        let pre = (0..k).map(|_| rng.gen_range(1..=9)).collect();
        let per = (0..l).map(|_| rng.gen_range(1..=9)).collect();
        out.push(CFExpansion::new(pre, per).unwrap());
    }
    out
}
