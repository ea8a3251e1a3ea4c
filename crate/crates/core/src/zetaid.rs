//! The matrix functions `U, V, X, Y, W` attached to an expansion and the
//! traced identity linking the zeta function of `f_theta` to `F_p, F_q`:
//!
//! `trace U^-1 (X - Y) V^-1 = 2 + z^l (log zeta)'(z^l) + z^l/(1 - z^l) + (-z)^l/(1 - (-z)^l)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cf::{CFExpansion, Convergents};
use crate::error::{AlgebraError, GenFunError};
use crate::genfun::generating_vector;
use crate::matrix::IntMatrix;
use crate::poly::Polynomial;
use crate::ratfun::{PowerSeries, RationalFunction, RfMatrix};
use crate::torus::ToralAutomorphism;

#[derive(Clone, Debug)]
pub struct Uvxy {
    pub u: RfMatrix,
    pub v: RfMatrix,
    pub x: RfMatrix,
    pub y: RfMatrix,
    /// Series of `X` agree with the convergent matrices up to this order.
    pub x_certified_to: Option<usize>,
}

/// `sum_{m<count} z^m E(a_from)...E(a_{from+m})` at level 1.
fn e_partial_sums(cf: &CFExpansion, from: usize, count: usize) -> RfMatrix {
    let mut acc = RfMatrix::zeros(2);
    let mut prod = IntMatrix::identity(2);
    for m in 0..count {
        prod = &prod * &cf.e_product(from + m, from + m, 1);
        acc = acc.add(&RfMatrix::monomial_times(&prod, m));
    }
    acc
}

/// Convergent-pair matrix `[[p_n, p_{n+1}], [q_n, q_{n+1}]]` series.
fn pair_series(cf: &CFExpansion, order: usize) -> [[PowerSeries; 2]; 2] {
    let conv: Vec<(BigInt, BigInt)> = Convergents::new(cf).take(order + 2).collect();
    let col = |f: &dyn Fn(&(BigInt, BigInt)) -> BigInt, shift: usize| {
        PowerSeries::from_ints(&(0..=order).map(|n| f(&conv[n + shift])).collect::<Vec<_>>())
    };
    let p = |c: &(BigInt, BigInt)| c.0.clone();
    let q = |c: &(BigInt, BigInt)| c.1.clone();
    [[col(&p, 0), col(&p, 1)], [col(&q, 0), col(&q, 1)]]
}

pub fn uvxy(cf: &CFExpansion, order: usize) -> Result<Uvxy, GenFunError> {
    let (k, l) = (cf.k(), cf.ell());
    let (n0, _) = cf.n0_n1(1);
    let u = RfMatrix::monomial_times(&n0, k);
    let v = e_partial_sums(cf, k + 1, l);
    let y = e_partial_sums(cf, 1, k);
    let g = generating_vector(cf, 1)?;
    let (fp, fq) = g.pair().expect("level 1");
    let z = RationalFunction::z_pow(1);
    // p_0 = 0 and q_0 = 1
    let x = RfMatrix::from_rows(vec![
        vec![fp.clone(), fp.div(&z)?],
        vec![fq.clone(), fq.sub(&RationalFunction::one()).div(&z)?],
    ]);
    let order = order.max(2 * (k + l) + 4);
    let expected = pair_series(cf, order);
    let got = x.series(order)?;
    let certified = (0..2).all(|i| (0..2).all(|j| got[i][j] == expected[i][j]));
    Ok(Uvxy { u, v, x, y, x_certified_to: certified.then_some(order) })
}

/// `W = (I - z^l N_1)^-1 = sum_n z^(n l) N_1^n`.
pub fn w_direct(cf: &CFExpansion) -> RfMatrix {
    let (_, n1) = cf.n0_n1(1);
    RfMatrix::identity(2).sub(&RfMatrix::monomial_times(&n1, cf.ell())).inverse().expect("I - z^l N_1 is invertible")
}

/// `U^-1 (X - Y) V^-1`.
pub fn w_from_uvxy(cf: &CFExpansion) -> Result<RfMatrix, GenFunError> {
    let m = uvxy(cf, 0)?;
    let v_inv = m.v.inverse().map_err(|_| AlgebraError::Singular)?;
    Ok(m.u.inverse()?.mul(&m.x.sub(&m.y)).mul(&v_inv))
}

/// `det V` as a polynomial.
pub fn det_v(cf: &CFExpansion) -> Polynomial {
    let v = e_partial_sums(cf, cf.k() + 1, cf.ell());
    let d = v.det();
    assert!(d.den().is_one(), "V has polynomial entries");
    d.num().clone()
}

/// The expansion of `det V` in the convergents of the periodic tail:
/// `D(0,l) z^(l-1) + sum_{0<m<l} (D(0,m) z^(m-1) + D(m,l) z^(l+m-1))`
/// with `D(i,j) = p_i q_j - p_j q_i`.
pub fn det_v_formula(cf: &CFExpansion) -> Polynomial {
    let l = cf.ell();
    let conv: Vec<(BigInt, BigInt)> = cf.periodic_part().convergents(l + 1);
    let dd = |i: usize, j: usize| &conv[i].0 * &conv[j].1 - &conv[j].0 * &conv[i].1;
    let term = |c: BigInt, deg: usize| Polynomial::monomial(BigRational::from_integer(c), deg);
    let mut acc = term(dd(0, l), l - 1);
    for m in 1..l {
        acc = acc.add(&term(dd(0, m), m - 1)).add(&term(dd(m, l), l + m - 1));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub equal_exact: bool,
    pub series_checked_to: usize,
    pub series_equal: bool,
    /// First coefficient where the two series differ.
    pub witness: Option<usize>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.equal_exact && self.series_equal
    }
}

/// `2 + z/(1 - z) + (-z)/(1 - (-z))` evaluated at `z^l`, i.e. the
/// correction term as it appears for a given period length.
pub fn correction_term(l: usize) -> RationalFunction {
    let zl = RationalFunction::z_pow(l);
    let one = RationalFunction::one();
    let first = zl.div(&one.sub(&zl)).expect("nonzero");
    let mzl = if l.is_multiple_of(2) { zl.clone() } else { zl.neg() };
    let second = mzl.div(&one.sub(&mzl)).expect("nonzero");
    RationalFunction::from_int(2).add(&first).add(&second)
}

/// Left side `z^l (log zeta_f)'(z^l) + R`.
pub fn identity_lhs(cf: &CFExpansion) -> RationalFunction {
    let f = ToralAutomorphism::from_quadratic(cf);
    let l = cf.ell();
    let dlog = f.zeta().log_derivative().expect("zeta is nonzero").compose_power(l);
    RationalFunction::z_pow(l).mul(&dlog).add(&correction_term(l))
}

pub fn main_identity_check(cf: &CFExpansion, order: usize) -> Result<IdentityReport, GenFunError> {
    let lhs = identity_lhs(cf);
    let rhs = w_from_uvxy(cf)?.trace();
    let (ls, rs) = (lhs.series(order)?, rhs.series(order)?);
    let witness = (0..=order).find(|&n| ls.coeff(n) != rs.coeff(n));
    Ok(IdentityReport {
        equal_exact: lhs == rhs,
        series_equal: witness.is_none(),
        lhs,
        rhs,
        series_checked_to: order,
        witness,
    })
}

/// `sum_n tr(N_1^(n/l)) z^n` over multiples of `l`, straight from powers.
pub fn trace_power_series(cf: &CFExpansion, order: usize) -> PowerSeries {
    let (_, n1) = cf.n0_n1(1);
    let l = cf.ell();
    let coeffs = (0..=order)
        .map(|n| if n % l == 0 { BigRational::from_integer(n1.pow((n / l) as u64).trace()) } else { BigRational::zero() })
        .collect();
    PowerSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn cf(pre: &[u64], per: &[u64]) -> CFExpansion {
        CFExpansion::new(pre.to_vec(), per.to_vec()).unwrap()
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_i64(n), Polynomial::from_i64(d)).unwrap()
    }

    fn int_rf(m: &[&[i64]]) -> RfMatrix {
        RfMatrix::from_int_matrix(&IntMatrix::from_i64(m))
    }

    #[test]
    fn golden_matrices() {
        let m = uvxy(&cf(&[], &[1]), 20).unwrap();
        assert_eq!(m.u, RfMatrix::identity(2));
        assert_eq!(m.y, RfMatrix::zeros(2));
        assert_eq!(m.v, int_rf(&[&[0, 1], &[1, 1]]));
        let den = &[1, -1, -1];
        let x = RfMatrix::from_rows(vec![vec![rf(&[0, 1], den), rf(&[1], den)], vec![rf(&[1], den), rf(&[1, 1], den)]]);
        assert_eq!(m.x, x);
        assert!(m.x_certified_to.is_some());
    }

    #[test]
    fn half_root_two_matrices() {
        let m = uvxy(&cf(&[1], &[2]), 20).unwrap();
        assert_eq!(m.u, RfMatrix::monomial_times(&IntMatrix::from_i64(&[&[0, 1], &[1, 1]]), 1));
        assert_eq!(m.y, int_rf(&[&[0, 1], &[1, 1]]));
        assert!(m.x_certified_to.is_some());
    }

    #[test]
    fn v_at_origin_is_first_period_matrix() {
        for c in [cf(&[], &[1]), cf(&[2, 3], &[4, 5, 6]), cf(&[1], &[7, 1])] {
            let v = uvxy(&c, 0).unwrap().v;
            let at0: Vec<BigRational> =
                (0..4).map(|i| v.get(i / 2, i % 2).eval(&BigRational::zero()).unwrap()).collect();
            let e = c.e_product(c.k() + 1, c.k() + 1, 1);
            let expected: Vec<BigRational> = (0..4).map(|i| BigRational::from_integer(e.get(i / 2, i % 2).clone())).collect();
            assert_eq!(at0, expected);
        }
    }

    #[test]
    fn w_two_ways() {
        let golden = w_direct(&cf(&[], &[1]));
        let den = &[1, -1, -1];
        assert_eq!(golden, RfMatrix::from_rows(vec![vec![rf(&[1, -1], den), rf(&[0, 1], den)], vec![rf(&[0, 1], den), rf(&[1], den)]]));
        assert_eq!(golden.trace(), rf(&[2, -1], den));
        assert_eq!(w_direct(&cf(&[], &[2])).get(0, 0).den(), &Polynomial::from_i64(&[1, -2, -1]));
        for c in [cf(&[], &[1]), cf(&[1], &[2]), cf(&[], &[1, 2]), cf(&[3, 1, 4], &[1, 5]), cf(&[2], &[1, 1, 3])] {
            assert_eq!(w_from_uvxy(&c).unwrap(), w_direct(&c), "{c}");
        }
    }

    #[test]
    fn w_series_is_sum_of_powers() {
        let c = cf(&[2], &[1, 3]);
        let w = w_direct(&c).series(40).unwrap();
        let (_, n1) = c.n0_n1(1);
        for n in 0..=40 {
            for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let expected = if n % 2 == 0 { n1.pow(n as u64 / 2).get(i, j).clone() } else { BigInt::zero() };
                assert_eq!(w[i][j].coeff(n), &BigRational::from_integer(expected));
            }
        }
        assert_eq!(w_direct(&c).trace().series(40).unwrap(), trace_power_series(&c, 40));
    }

    #[test]
    fn det_v_examples() {
        assert_eq!(det_v(&cf(&[], &[1])), Polynomial::from_i64(&[-1]));
        assert_eq!(det_v_formula(&cf(&[], &[1])), Polynomial::from_i64(&[-1]));
        // V = E(a) + z E(a) E(b) has det -1 - b z + z^2
        assert_eq!(det_v(&cf(&[], &[1, 2])), Polynomial::from_i64(&[-1, -2, 1]));
        assert_eq!(det_v_formula(&cf(&[], &[1, 2])), Polynomial::from_i64(&[-1, -2, 1]));
        for c in [cf(&[3], &[1, 4, 1, 5]), cf(&[], &[9, 2, 6]), cf(&[1, 1], &[2, 3, 5, 7])] {
            let d = det_v(&c);
            assert_eq!(d, det_v_formula(&c), "{c}");
            assert!(d.degree().unwrap() <= 2 * c.ell() - 1);
        }
    }

    #[test]
    fn identity_examples() {
        let rep = main_identity_check(&cf(&[], &[1]), 40).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.lhs, rf(&[2, -1], &[1, -1, -1]));
        assert_eq!(rep.rhs.to_string(), "(2 - z) / (1 - z - z^2)");
        assert!(main_identity_check(&cf(&[1], &[2]), 50).unwrap().passed());
        assert!(main_identity_check(&cf(&[], &[1, 2]), 40).unwrap().passed());
    }

    #[test]
    fn correction_term_parity() {
        // l = 1: 2 + z/(1-z) - z/(1+z) = 2 + 2z^2/(1-z^2)
        assert_eq!(correction_term(1), rf(&[2], &[1, 0, -1]));
        // l = 2: 2 + 2 z^2/(1 - z^2)
        assert_eq!(correction_term(2), rf(&[2], &[1, 0, -1]));
        // l = 3: 2 + z^3/(1-z^3) - z^3/(1+z^3) = 2 + 2z^6/(1-z^6)
        assert_eq!(correction_term(3), rf(&[2], &[1, 0, 0, 0, 0, 0, -1]));
        // l = 4 has both terms equal: 2 + 2z^4/(1-z^4)
        assert_eq!(correction_term(4), rf(&[2], &[1, 0, 0, 0, -1]));
    }

    #[test]
    fn decomposition_through_prefix() {
        let c = cf(&[2, 1], &[3, 1, 4]);
        let order = 40;
        let full = pair_series(&c, order);
        for m in 0..=c.k() + c.ell() {
            let tail = pair_series(&c.shifted(m), order);
            let prefix = c.e_product(1, m, 1);
            let head: Vec<IntMatrix> = (0..m).map(|n| c.e_product(1, n + 1, 1)).collect();
            for n in 0..=order {
                for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let expected = full[i][j].coeff(n);
                    let got = if n < m {
                        BigRational::from_integer(head[n].get(i, j).clone())
                    } else {
                        (0..2).map(|t| tail[t][j].coeff(n - m) * prefix.get(i, t)).fold(BigRational::zero(), |a, b| a + b)
                    };
                    assert_eq!(&got, expected, "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn traces_of_period_powers() {
        // tr N_1^n > 1 + det(N_1)^n, which is > 2 exactly when det(N_1^n) = 1
        for c in [cf(&[], &[1]), cf(&[], &[1, 1, 2]), cf(&[4], &[1, 2]), cf(&[], &[3]), cf(&[2], &[1, 4, 1, 1])] {
            let (_, n1) = c.n0_n1(1);
            let det = n1.det();
            assert_eq!(det, BigInt::from(if c.ell() % 2 == 0 { 1 } else { -1 }));
            for n in 1..=30u64 {
                let p = n1.pow(n);
                let det_n = det.pow(n as u32);
                assert!(p.trace() > BigInt::one() + &det_n, "{c} n={n}");
                if det_n.is_one() {
                    assert!(p.trace() > BigInt::from(2));
                }
                let fix = IntMatrix::identity(2).sub(&p).det();
                assert_eq!(num_traits::Signed::abs(&fix), p.trace() - BigInt::one() - det_n);
            }
        }
    }
}
