//! Serializable reports. Exact values become JSON integers (of any size) or
//! `[num, den]` pairs; floating values become decimal strings.

use crate::cf::CFExpansion;
use crate::error::{GenFunError, LevyError, TorusError};
use crate::genfun::{self, direct_series, generating_vector};
use crate::levy;
use crate::matrix::IntMatrix;
use crate::parse::{Input, InputError};
use crate::poly::Polynomial;
use crate::ratfun::{PowerSeries, RationalFunction};
use crate::real::{levy_khinchin_reference, Real};
use crate::surd::QuadraticSurd;
use crate::torus::{is_prime_hyperbolic_cf, PrimeCase, ToralAutomorphism};
use crate::zetaid;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    Levy(#[from] LevyError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error("`{0}` needs a surd or continued fraction, not a matrix")]
    NeedsQuadratic(&'static str),
}

/// Arbitrary-size integer, written as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInt(pub BigInt);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string()).expect("integer literal").serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map(ExactInt).map_err(D::Error::custom)
    }
}

impl From<&BigInt> for ExactInt {
    fn from(n: &BigInt) -> Self {
        ExactInt(n.clone())
    }
}

/// Integer when the denominator is 1, `[num, den]` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactRational {
    Int(ExactInt),
    Frac([ExactInt; 2]),
}

impl From<&BigRational> for ExactRational {
    fn from(r: &BigRational) -> Self {
        if r.denom().is_one() {
            ExactRational::Int(r.numer().into())
        } else {
            ExactRational::Frac([r.numer().into(), r.denom().into()])
        }
    }
}

impl ExactRational {
    pub fn value(&self) -> BigRational {
        match self {
            ExactRational::Int(n) => BigRational::from_integer(n.0.clone()),
            ExactRational::Frac([n, d]) => BigRational::new(n.0.clone(), d.0.clone()),
        }
    }
}

fn ints(v: &[BigInt]) -> Vec<ExactInt> {
    v.iter().map(ExactInt::from).collect()
}

fn series(s: &PowerSeries) -> Vec<ExactRational> {
    s.coeffs().iter().map(ExactRational::from).collect()
}

fn poly(p: &Polynomial) -> Vec<ExactRational> {
    p.coeffs().iter().map(ExactRational::from).collect()
}

/// Decimal digits that `bits` of precision can vouch for.
pub fn decimal_digits(bits: u32) -> usize {
    ((bits as f64 * std::f64::consts::LOG10_2) as usize).saturating_sub(3).max(6)
}

fn dec(x: &Real, bits: u32) -> String {
    x.to_decimal(decimal_digits(bits))
}

fn sci(x: f64) -> String {
    format!("{x:e}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    /// Coefficients, constant term first.
    pub num: Vec<ExactInt>,
    pub den: Vec<ExactInt>,
    pub text: String,
}

impl From<&RationalFunction> for RatFunJson {
    fn from(f: &RationalFunction) -> Self {
        let (n, d) = f.int_coeffs();
        RatFunJson { num: ints(&n), den: ints(&d), text: f.to_string() }
    }
}

impl RatFunJson {
    pub fn value(&self) -> RationalFunction {
        let p = |v: &[ExactInt]| Polynomial::from_ints(&v.iter().map(|n| n.0.clone()).collect::<Vec<_>>());
        RationalFunction::new(p(&self.num), p(&self.den)).expect("nonzero denominator")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdJson {
    pub p: ExactInt,
    pub q: ExactInt,
    pub d: ExactInt,
    pub text: String,
    pub decimal: String,
}

impl SurdJson {
    fn new(x: &QuadraticSurd, bits: u32) -> Self {
        SurdJson {
            p: x.p().into(),
            q: x.q().into(),
            d: x.d().into(),
            text: x.to_string(),
            decimal: dec(&x.to_real(bits), bits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfJson {
    pub preperiod: Vec<u64>,
    pub period: Vec<u64>,
    pub k: usize,
    pub ell: usize,
    pub text: String,
}

impl From<&CFExpansion> for CfJson {
    fn from(cf: &CFExpansion) -> Self {
        CfJson {
            preperiod: cf.preperiod().to_vec(),
            period: cf.period().to_vec(),
            k: cf.k(),
            ell: cf.ell(),
            text: cf.to_string(),
        }
    }
}

impl CfJson {
    pub fn value(&self) -> CFExpansion {
        CFExpansion::new(self.preperiod.clone(), self.period.clone()).expect("valid expansion")
    }
}

fn matrix(m: &IntMatrix) -> Vec<Vec<ExactInt>> {
    m.rows().iter().map(|r| ints(r)).collect()
}

/// Knobs shared by all reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub order: usize,
    pub precision: u32,
    pub r: usize,
    pub levy_depth: usize,
    pub mc_depth: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { order: 40, precision: 128, r: 1, levy_depth: 10_000, mc_depth: 500, samples: 100, seed: 1 }
    }
}

/// Reports that carry a pass/fail verdict.
pub trait Verdict {
    fn passed(&self) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandReport {
    pub input: String,
    pub integer_part: ExactInt,
    /// The value in (0, 1) that was expanded.
    pub surd: SurdJson,
    pub conjugate: SurdJson,
    /// `[a, b, c]` for `a z^2 + b z + c`.
    pub minimal_polynomial: [ExactInt; 3],
    pub cf: CfJson,
}

pub fn expand_report(text: &str, input: &Input, cfg: &Config) -> Result<ExpandReport, ReportError> {
    let (integer_part, x) = match input {
        Input::Surd(s) => (s.integer_part.clone(), s.fractional.clone()),
        Input::Cf(cf) => (BigInt::zero(), cf.to_surd()),
        Input::Matrix(_) => return Err(ReportError::NeedsQuadratic("expand")),
    };
    let cf = CFExpansion::expand(&x).map_err(InputError::from)?;
    let (a, b, c) = x.minimal_polynomial();
    Ok(ExpandReport {
        input: text.trim().to_string(),
        integer_part: (&integer_part).into(),
        conjugate: SurdJson::new(&x.galois_conjugate(), cfg.precision),
        surd: SurdJson::new(&x, cfg.precision),
        minimal_polynomial: [(&a).into(), (&b).into(), (&c).into()],
        cf: (&cf).into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergentsReport {
    pub cf: CfJson,
    /// `p_0 .. p_{count-1}`, seeds included.
    pub p: Vec<ExactInt>,
    pub q: Vec<ExactInt>,
    /// Every pair has gcd 1.
    pub coprime: bool,
}

impl Verdict for ConvergentsReport {
    fn passed(&self) -> bool {
        self.coprime
    }
}

pub fn convergents_report(cf: &CFExpansion, cfg: &Config) -> ConvergentsReport {
    use num_integer::Integer;
    let conv = cf.convergents(cfg.order + 1);
    ConvergentsReport {
        cf: cf.into(),
        coprime: conv.iter().all(|(p, q)| p.gcd(q).is_one()),
        p: conv.iter().map(|c| (&c.0).into()).collect(),
        q: conv.iter().map(|c| (&c.1).into()).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunEntry {
    /// Generating function of `p_n^(r-s) q_n^s`.
    pub s: usize,
    pub function: RatFunJson,
    pub series: Vec<ExactRational>,
    pub matches_direct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenFunReport {
    pub cf: CfJson,
    pub r: usize,
    pub order: usize,
    pub entries: Vec<GenFunEntry>,
    /// Dominant eigenvalue of the level-r period matrix.
    pub spectral_radius: String,
    pub radius_of_convergence: String,
}

impl Verdict for GenFunReport {
    fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.matches_direct)
    }
}

pub fn genfun_report(cf: &CFExpansion, cfg: &Config) -> Result<GenFunReport, ReportError> {
    let v = generating_vector(cf, cfg.r)?;
    let mut entries = Vec::new();
    for (s, f) in v.entries().iter().enumerate() {
        let ser = f.series(cfg.order).map_err(GenFunError::from)?;
        let direct = direct_series(cf, cfg.r, s, cfg.order)?;
        entries.push(GenFunEntry { s, function: f.into(), series: series(&ser), matches_direct: ser == direct });
    }
    let bits = cfg.precision;
    Ok(GenFunReport {
        cf: cf.into(),
        r: cfg.r,
        order: cfg.order,
        entries,
        spectral_radius: dec(&genfun::period_spectral_radius(cf, cfg.r, bits)?, bits),
        radius_of_convergence: dec(&genfun::radius_of_convergence(cf, cfg.r, bits)?, bits),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevyJson {
    pub cf: CfJson,
    pub exact: String,
    pub birkhoff: String,
    pub empirical: String,
    pub depth: usize,
    pub exact_vs_birkhoff: String,
    pub exact_vs_empirical: String,
    /// Birkhoff within 2^-40, empirical within 3/depth.
    pub within_tolerance: bool,
}

impl Verdict for LevyJson {
    fn passed(&self) -> bool {
        self.within_tolerance
    }
}

pub fn levy_json(cf: &CFExpansion, cfg: &Config) -> Result<LevyJson, ReportError> {
    let bits = cfg.precision;
    let r = levy::levy_report(cf, cfg.levy_depth, bits)?;
    Ok(LevyJson {
        cf: cf.into(),
        exact: dec(&r.exact, bits),
        birkhoff: dec(&r.birkhoff, bits),
        empirical: dec(&r.empirical, bits),
        depth: r.depth,
        exact_vs_birkhoff: sci(r.exact_vs_birkhoff),
        exact_vs_empirical: sci(r.exact_vs_empirical),
        within_tolerance: r.exact_vs_birkhoff < 2f64.powi(-40) && r.exact_vs_empirical < 3.0 / r.depth as f64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeJson {
    pub prime: bool,
    /// "a", "b" or "none".
    pub case: String,
    pub length: usize,
    pub minimal_period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusReport {
    pub matrix: Vec<Vec<ExactInt>>,
    pub trace: ExactInt,
    pub det: ExactInt,
    /// `#Fix(f^n)` for `n = 1..=order`.
    pub fix_counts: Vec<ExactInt>,
    /// Brute-force enumeration agreed for `n = 1..=bruteforce_checked_to`.
    pub bruteforce_checked_to: u64,
    pub bruteforce_agrees: bool,
    pub entropy: String,
    pub spectral_radius: String,
    pub norm: String,
    pub geodesic_length: String,
    pub prime: Option<PrimeJson>,
}

impl Verdict for TorusReport {
    fn passed(&self) -> bool {
        self.bruteforce_agrees
    }
}

/// Largest iterate the brute-force cross-check is attempted for.
pub const BRUTE_FORCE_MAX_ITERATE: u64 = 8;

pub fn torus_report(t: &ToralAutomorphism, cf: Option<&CFExpansion>, cfg: &Config) -> Result<TorusReport, ReportError> {
    let bits = cfg.precision;
    let counts = (1..=cfg.order as u64).map(|n| t.fix_count(n)).collect::<Result<Vec<_>, _>>()?;
    let mut checked = 0;
    let mut agrees = true;
    for n in 1..=BRUTE_FORCE_MAX_ITERATE.min(cfg.order as u64) {
        match t.fix_points_bruteforce(n) {
            Ok(pts) => {
                agrees &= BigInt::from(pts.len()) == counts[n as usize - 1];
                checked = n;
            }
            Err(TorusError::GuardExceeded { .. }) => break,
            Err(e) => return Err(e.into()),
        }
    }
    let (norm, length) = t.norm_and_geodesic_length(bits);
    let prime = cf.map(|cf| {
        let p = is_prime_hyperbolic_cf(cf);
        let case = match p.case {
            PrimeCase::A => "a",
            PrimeCase::B => "b",
            PrimeCase::None => "none",
        };
        PrimeJson { prime: p.prime, case: case.to_string(), length: p.length, minimal_period: p.minimal_period }
    });
    Ok(TorusReport {
        matrix: matrix(t.matrix()),
        trace: (&t.trace()).into(),
        det: (&t.det()).into(),
        fix_counts: ints(&counts),
        bruteforce_checked_to: checked,
        bruteforce_agrees: agrees,
        entropy: dec(&t.entropy(bits), bits),
        spectral_radius: dec(&t.spectral_radius(bits), bits),
        norm: dec(&norm, bits),
        geodesic_length: dec(&length, bits),
        prime,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub matrix: Vec<Vec<ExactInt>>,
    pub zeta: RatFunJson,
    /// Coefficients of `exp(sum #Fix(f^n) z^n / n)`.
    pub series: Vec<ExactRational>,
    pub order: usize,
    pub closed_form_matches: bool,
    /// Smallest pole modulus, `exp(-entropy)`.
    pub pole_radius: String,
}

impl Verdict for ZetaReport {
    fn passed(&self) -> bool {
        self.closed_form_matches
    }
}

pub fn zeta_report(t: &ToralAutomorphism, cfg: &Config) -> Result<ZetaReport, ReportError> {
    let z = t.zeta();
    let s = t.zeta_series(cfg.order);
    let closed = z.series(cfg.order).map_err(GenFunError::from)?;
    Ok(ZetaReport {
        matrix: matrix(t.matrix()),
        zeta: (&z).into(),
        series: series(&s),
        order: cfg.order,
        closed_form_matches: closed == s,
        pole_radius: dec(&t.entropy(cfg.precision).neg().exp(), cfg.precision),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub lhs: RatFunJson,
    pub rhs: RatFunJson,
    pub equal_exact: bool,
    pub series_checked_to: usize,
    pub series_equal: bool,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub cf: CfJson,
    pub order: usize,
    /// Trace identity between the zeta function and the generating functions.
    pub identity: IdentityJson,
    /// `U^-1 (X - Y) V^-1` equals `(I - z^l N_1)^-1`.
    pub w_two_ways: bool,
    pub det_v: Vec<ExactRational>,
    pub det_v_formula_matches: bool,
    /// Closed-form generating functions match the convergents (level 1).
    pub genfun_closed_form: bool,
    /// One-step Gauss shift identity at level 1.
    pub shift_identity: bool,
}

impl Verdict for VerifyReport {
    fn passed(&self) -> bool {
        self.identity.equal_exact
            && self.identity.series_equal
            && self.w_two_ways
            && self.det_v_formula_matches
            && self.genfun_closed_form
            && self.shift_identity
    }
}

pub fn verify_report(cf: &CFExpansion, cfg: &Config) -> Result<VerifyReport, ReportError> {
    let order = cfg.order.max(10);
    let id = zetaid::main_identity_check(cf, order)?;
    let w_two_ways = zetaid::w_from_uvxy(cf)? == zetaid::w_direct(cf);
    let dv = zetaid::det_v(cf);
    let v = generating_vector(cf, 1)?;
    let mut genfun_ok = true;
    for s in 0..=1 {
        genfun_ok &= v.get(s).series(order).map_err(GenFunError::from)? == direct_series(cf, 1, s, order)?;
    }
    let shift = genfun::shift_identity_check(&cf.to_surd(), 1, 1, order.min(40))?.passed();
    Ok(VerifyReport {
        cf: cf.into(),
        order,
        identity: IdentityJson {
            lhs: (&id.lhs).into(),
            rhs: (&id.rhs).into(),
            equal_exact: id.equal_exact,
            series_checked_to: id.series_checked_to,
            series_equal: id.series_equal,
            witness: id.witness,
        },
        w_two_ways,
        det_v_formula_matches: dv == zetaid::det_v_formula(cf),
        det_v: poly(&dv),
        genfun_closed_form: genfun_ok,
        shift_identity: shift,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonteCarloReport {
    pub samples: usize,
    pub depth: usize,
    /// Decimal digits of the sampled denominators.
    pub digits: usize,
    pub seed: u64,
    pub mean: String,
    pub stddev: String,
    /// `pi^2 / (12 ln 2)`.
    pub reference: String,
    pub relative_error: String,
    /// Mean within 2% of the reference.
    pub within_two_percent: bool,
}

impl Verdict for MonteCarloReport {
    fn passed(&self) -> bool {
        self.within_two_percent
    }
}

pub fn montecarlo_report(cfg: &Config) -> Result<MonteCarloReport, ReportError> {
    let r = levy::levy_ae_montecarlo(cfg.samples, cfg.mc_depth, cfg.seed)?;
    let reference = levy_khinchin_reference();
    let rel = (r.mean - reference).abs() / reference;
    Ok(MonteCarloReport {
        samples: r.samples,
        depth: r.depth,
        digits: r.digits,
        seed: cfg.seed,
        mean: format!("{:.6}", r.mean),
        stddev: format!("{:.6}", r.stddev),
        reference: format!("{reference:.6}"),
        relative_error: sci(rel),
        within_two_percent: rel < 0.02,
    })
}

/// Everything at once. Sections that need a quadratic irrational are
/// absent for raw matrix input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub expand: Option<ExpandReport>,
    pub convergents: Option<ConvergentsReport>,
    pub genfun: Option<GenFunReport>,
    pub levy: Option<LevyJson>,
    pub torus: TorusReport,
    pub zeta: ZetaReport,
    pub verify: Option<VerifyReport>,
    pub montecarlo: MonteCarloReport,
    pub passed: bool,
}

impl Verdict for FullReport {
    fn passed(&self) -> bool {
        self.passed
    }
}

pub fn full_report(text: &str, input: &Input, cfg: &Config) -> Result<FullReport, ReportError> {
    let cf = input.cf()?;
    let t = input.automorphism()?;
    type Quad = (Option<ExpandReport>, Option<ConvergentsReport>, Option<GenFunReport>, Option<LevyJson>);
    let quadratic = || -> Result<Quad, ReportError> {
        let Some(cf) = &cf else { return Ok((None, None, None, None)) };
        let ((e, g), l) = rayon::join(
            || rayon::join(|| expand_report(text, input, cfg), || genfun_report(cf, cfg)),
            || levy_json(cf, cfg),
        );
        Ok((Some(e?), Some(convergents_report(cf, cfg)), Some(g?), Some(l?)))
    };
    let dynamics = || -> Result<(TorusReport, ZetaReport, Option<VerifyReport>), ReportError> {
        let ((tr, z), v) = rayon::join(
            || rayon::join(|| torus_report(&t, cf.as_ref(), cfg), || zeta_report(&t, cfg)),
            || cf.as_ref().map(|cf| verify_report(cf, cfg)).transpose(),
        );
        Ok((tr?, z?, v?))
    };
    let ((quad, dyn_), mc) = rayon::join(|| rayon::join(quadratic, dynamics), || montecarlo_report(cfg));
    let (expand, convergents, genfun, levy) = quad?;
    let (torus, zeta, verify) = dyn_?;
    let montecarlo = mc?;
    let passed = convergents.as_ref().is_none_or(Verdict::passed)
        && genfun.as_ref().is_none_or(Verdict::passed)
        && levy.as_ref().is_none_or(Verdict::passed)
        && torus.passed()
        && zeta.passed()
        && verify.as_ref().is_none_or(Verdict::passed)
        && montecarlo.passed();
    Ok(FullReport { expand, convergents, genfun, levy, torus, zeta, verify, montecarlo, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_input;

    fn cfg(order: usize) -> Config {
        Config { order, levy_depth: 2000, ..Config::default() }
    }

    #[test]
    fn exact_int_is_a_bare_number() {
        let big = BigInt::from(3).pow(100);
        let s = serde_json::to_string(&ExactInt(big.clone())).unwrap();
        assert_eq!(s, big.to_string());
        let back: ExactInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big);
    }

    #[test]
    fn rationals_as_pairs() {
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(serde_json::to_string(&ExactRational::from(&half)).unwrap(), "[-1,2]");
        let seven = BigRational::from_integer(BigInt::from(7));
        assert_eq!(serde_json::to_string(&ExactRational::from(&seven)).unwrap(), "7");
        let back: ExactRational = serde_json::from_str("[-1,2]").unwrap();
        assert_eq!(back.value(), half);
    }

    #[test]
    fn golden_verify() {
        let cf = CFExpansion::purely_periodic(vec![1]).unwrap();
        let r = verify_report(&cf, &cfg(40)).unwrap();
        assert!(r.passed());
        assert_eq!(r.identity.lhs.text, "(2 - z) / (1 - z - z^2)");
        assert_eq!(r.identity.rhs.text, "(2 - z) / (1 - z - z^2)");
        assert_eq!(r.identity.rhs.value(), r.identity.lhs.value());
    }

    #[test]
    fn cat_map_counts() {
        let Input::Matrix(t) = parse_input("[[2,1],[1,1]]").unwrap() else { panic!() };
        let r = torus_report(&t, None, &cfg(6)).unwrap();
        let counts: Vec<i64> = r.fix_counts.iter().map(|n| i64::try_from(&n.0).unwrap()).collect();
        assert_eq!(counts, [1, 5, 16, 45, 121, 320]);
        assert_eq!(r.bruteforce_checked_to, 6);
        assert!(r.passed());
    }

    #[test]
    fn full_report_round_trips() {
        let text = "(-1+sqrt(5))/2";
        let input = parse_input(text).unwrap();
        let c = Config { samples: 4, mc_depth: 100, ..cfg(12) };
        let r = full_report(text, &input, &c).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: FullReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert_eq!(r.expand.as_ref().unwrap().cf.text, "[;(1)]");
        assert_eq!(r.levy.as_ref().unwrap().exact[..8].to_string(), "0.481211");
    }

    #[test]
    fn matrix_input_skips_quadratic_sections() {
        let text = "[[1,1],[2,1]]";
        let c = Config { samples: 2, mc_depth: 100, ..cfg(8) };
        let r = full_report(text, &parse_input(text).unwrap(), &c).unwrap();
        assert!(r.expand.is_none() && r.verify.is_none());
        assert_eq!(r.zeta.zeta.value(), ToralAutomorphism::from_i64(1, 1, 2, 1).unwrap().zeta());
        assert!(matches!(
            expand_report(text, &parse_input(text).unwrap(), &c),
            Err(ReportError::NeedsQuadratic("expand"))
        ));
    }
}
