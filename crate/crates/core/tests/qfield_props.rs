mod common;

use cfzeta::surd::{is_perfect_square, isqrt};
use cfzeta::{CFExpansion, QuadNumber, Real};
use common::{arb_cf, arb_surd};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gauss_step_matches_high_precision_floats(x in arb_surd()) {
        let (a, next) = x.gauss_step().unwrap();
        prop_assert!(a >= BigInt::from(1));
        let approx = Real::from_i64(1, 128).div(&x.to_real(128)).sub(&Real::from_bigint(&a, 128));
        let diff = approx.sub(&next.to_real(128)).abs();
        prop_assert!(diff.to_f64() < 2f64.powi(-40));
        prop_assert!(next.is_in_unit_interval());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn minimal_polynomial_vanishes(x in arb_surd()) {
        let (a, b, c) = x.minimal_polynomial();
        prop_assert!(a.is_positive());
        prop_assert_eq!(a.gcd(&b).gcd(&c), BigInt::from(1));
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        prop_assert!(disc.is_positive() && !is_perfect_square(&disc));
        for root in [x.clone(), x.galois_conjugate()] {
            let t = root.to_quad();
            let value = t.mul(&t).scale(&a).add(&t.scale(&b)).add(&QuadNumber::from_integer(&c, x.d()));
            prop_assert!(value.is_zero());
        }
        prop_assert_eq!(x.galois_conjugate().minimal_polynomial(), (a, b, c));
    }

    #[test]
    fn conjugation_is_an_involution(x in arb_surd()) {
        prop_assert_eq!(x.galois_conjugate().galois_conjugate(), x.clone());
        prop_assert!(x.galois_conjugate() != x);
    }

    #[test]
    fn orbit_is_bounded_and_cycles(x in arb_surd()) {
        let cf = CFExpansion::expand(&x).unwrap();
        let mut y = x.clone();
        for _ in 0..cf.k() {
            y = y.gauss_step().unwrap().1;
        }
        let start = y.clone();
        // reduced complete quotients have |P|, |Q| <= 2 sqrt(D)
        let bound = BigInt::from(2) * (isqrt(y.d()) + 1);
        for _ in 0..cf.ell() {
            prop_assert!(y.p().abs() <= bound && y.q().abs() <= bound);
            y = y.gauss_step().unwrap().1;
        }
        prop_assert_eq!(y, start);
    }

    #[test]
    fn expansion_round_trips(c in arb_cf(5, 5, 20)) {
        let x = c.to_surd();
        prop_assert!(x.is_in_unit_interval());
        prop_assert_eq!(CFExpansion::expand(&x).unwrap(), c);
    }

    #[test]
    fn floor_agrees_with_floats(p in -10_000i64..10_000, q in 1i64..500, neg in any::<bool>(), d in 2i64..100_000) {
        prop_assume!(!is_perfect_square(&BigInt::from(d)));
        let q = if neg { -q } else { q };
        let x = cfzeta::QuadraticSurd::from_i64(p, q, d).unwrap();
        let v = x.to_real(128);
        let f = Real::from_bigint(&x.floor(), 128);
        prop_assert!(!v.sub(&f).is_negative());
        prop_assert!(v.sub(&f).sub(&Real::from_i64(1, 128)).is_negative());
    }
}
