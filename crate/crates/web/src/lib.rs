//! Browser bindings: each export takes text input and returns a JSON string.

use cfzeta::levy::levy_exact;
use cfzeta::real::ln_bigint;
use cfzeta::report::{self, Config};
use cfzeta::{parse_input, CFExpansion, Input};
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest series order the page may request.
pub const MAX_ORDER: usize = 200;
/// Largest number of torus points returned.
pub const MAX_POINTS: usize = 20_000;
/// Largest convergent index for the Levy curve.
pub const MAX_TERMS: usize = 5_000;

const BITS: u32 = 96;

fn parse(text: &str) -> Result<Input, String> {
    parse_input(text).map_err(|e| e.to_string())
}

fn quadratic(input: &Input) -> Result<Option<CFExpansion>, String> {
    input.cf().map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

#[derive(Serialize)]
struct Analysis {
    expand: Option<report::ExpandReport>,
    genfun: Option<report::GenFunReport>,
    levy: Option<report::LevyJson>,
    verify: Option<report::VerifyReport>,
    torus: report::TorusReport,
    zeta: report::ZetaReport,
}

/// Expansion, generating functions, Levy constants, the zeta identity and
/// the toral automorphism for a surd, continued fraction or matrix.
pub fn analyze_json(text: &str, order: usize) -> Result<String, String> {
    let order = order.clamp(1, MAX_ORDER);
    let cfg = Config { order, precision: BITS, levy_depth: 2_000, ..Config::default() };
    let input = parse(text)?;
    let cf = quadratic(&input)?;
    let t = input.automorphism().map_err(|e| e.to_string())?;
    let err = |e: report::ReportError| e.to_string();
    let analysis = Analysis {
        expand: cf.as_ref().map(|_| report::expand_report(text, &input, &cfg)).transpose().map_err(err)?,
        genfun: cf.as_ref().map(|c| report::genfun_report(c, &cfg)).transpose().map_err(err)?,
        levy: cf.as_ref().map(|c| report::levy_json(c, &cfg)).transpose().map_err(err)?,
        verify: cf.as_ref().map(|c| report::verify_report(c, &Config { order: order.min(30), ..cfg.clone() })).transpose().map_err(err)?,
        torus: report::torus_report(&t, cf.as_ref(), &Config { order: order.min(12), ..cfg.clone() }).map_err(err)?,
        zeta: report::zeta_report(&t, &Config { order: order.min(30), ..cfg.clone() }).map_err(err)?,
    };
    Ok(to_json(&analysis))
}

#[derive(Serialize)]
struct TorusPoints {
    n: u64,
    count: String,
    /// Fixed points of `f^n` in `[0,1)^2`, as floats for plotting.
    points: Vec<[f64; 2]>,
}

/// Fixed points of the `n`-th iterate of the toral automorphism.
pub fn torus_points_json(text: &str, n: u64) -> Result<String, String> {
    let t = parse(text)?.automorphism().map_err(|e| e.to_string())?;
    let n = n.max(1);
    let count = t.fix_count(n).map_err(|e| e.to_string())?;
    if count > MAX_POINTS.into() {
        return Err(format!("f^{n} has {count} fixed points; the plot shows at most {MAX_POINTS}"));
    }
    let pts = t.fix_points_bruteforce(n).map_err(|e| e.to_string())?;
    let f = |r: &num_rational::BigRational| r.to_f64().unwrap_or(f64::NAN);
    Ok(to_json(&TorusPoints { n, count: count.to_string(), points: pts.iter().map(|(x, y)| [f(x), f(y)]).collect() }))
}

#[derive(Serialize)]
struct LevyCurve {
    exact: f64,
    /// `(n, log q_n / n)`.
    points: Vec<(usize, f64)>,
}

/// `log q_n / n` for `n = 1..=terms` against the exact Levy constant.
pub fn levy_curve_json(text: &str, terms: usize) -> Result<String, String> {
    let cf = quadratic(&parse(text)?)?.ok_or("the Levy constant needs a surd or continued fraction")?;
    let terms = terms.clamp(2, MAX_TERMS);
    let points = cf
        .convergents(terms + 1)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, (_, q))| (n, ln_bigint(&q, 64).to_f64() / n as f64))
        .collect();
    Ok(to_json(&LevyCurve { exact: levy_exact(&cf, 64).to_f64(), points }))
}

#[wasm_bindgen]
pub fn analyze(text: &str, order: usize) -> Result<String, JsError> {
    analyze_json(text, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn torus_points(text: &str, n: u32) -> Result<String, JsError> {
    torus_points_json(text, n.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn levy_curve(text: &str, terms: usize) -> Result<String, JsError> {
    levy_curve_json(text, terms).map_err(|e| JsError::new(&e))
}
