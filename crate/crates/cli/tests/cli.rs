use std::process::{Command, Output};

use cfzeta::report::{
    ConvergentsReport, ExpandReport, FullReport, GenFunReport, LevyJson, MonteCarloReport, TorusReport, VerifyReport,
    ZetaReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfzeta")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let text = stdout(&out);
    (out.status.code().unwrap(), serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")))
}

/// Parses into the documented type and serializes back unchanged.
fn round_trip<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let (code, value) = json(args);
    assert_eq!(code, 0, "{args:?}");
    let typed: T = serde_json::from_value(value.clone()).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), value, "{args:?}");
    typed
}

#[test]
fn verify_golden_ratio() {
    let out = run(&["verify", "--cf", "[;(1)]", "--order", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lhs: (2 - z) / (1 - z - z^2)"), "{text}");
    assert!(text.contains("rhs: (2 - z) / (1 - z - z^2)"), "{text}");
}

#[test]
fn levy_silver_ratio() {
    let rep: LevyJson = round_trip(&["levy", "--cf", "[;(2)]"]);
    assert!(rep.exact.starts_with("0.881373"), "{}", rep.exact);
    let exact: f64 = rep.exact.parse().unwrap();
    let empirical: f64 = rep.empirical.parse().unwrap();
    assert_eq!(rep.depth, 10_000);
    assert!((exact - empirical).abs() < 1e-3);
}

#[test]
fn cat_map_counts() {
    let rep: TorusReport = round_trip(&["torus", "--matrix", "[[2,1],[1,1]]", "--order", "6"]);
    let counts: Vec<String> = rep.fix_counts.iter().map(|c| c.0.to_string()).collect();
    assert_eq!(counts, ["1", "5", "16", "45", "121", "320"]);
    let text = stdout(&run(&["torus", "--matrix", "[[2,1],[1,1]]", "--order", "6"]));
    assert!(text.contains("fix_counts: [1, 5, 16, 45, 121, 320]"), "{text}");
}

#[test]
fn every_report_round_trips() {
    let e: ExpandReport = round_trip(&["expand", "--surd", "(-1+sqrt(5))/2"]);
    assert_eq!(e.cf.text, "[;(1)]");
    let c: ConvergentsReport = round_trip(&["convergents", "--cf", "[1;(2)]", "--order", "10"]);
    assert!(c.coprime);
    let g: GenFunReport = round_trip(&["genfun", "--cf", "[1;(2)]", "--r", "2", "--order", "12"]);
    assert_eq!(g.entries.len(), 3);
    let z: ZetaReport = round_trip(&["zeta", "--matrix", "[[2,1],[1,1]]", "--order", "10"]);
    assert_eq!(z.zeta.value().to_string(), "(1 - 2z + z^2) / (1 - 3z + z^2)");
    let v: VerifyReport = round_trip(&["verify", "--surd", "sqrt(7)/3"]);
    assert!(v.identity.equal_exact);
    let m: MonteCarloReport = round_trip(&["montecarlo", "--samples", "100", "--depth", "500", "--seed", "1"]);
    assert!(m.within_two_percent);
    let f: FullReport = round_trip(&["report", "--cf", "[3;(1,2)]", "--order", "12"]);
    assert!(f.passed && f.verify.is_some());
}

#[test]
fn exact_values_are_integers_not_floats() {
    let (_, v) = json(&["genfun", "--cf", "[;(1)]", "--order", "80"]);
    let series = v["entries"][1]["series"].as_array().unwrap();
    // q_80 of the golden ratio exceeds 2^53
    assert_eq!(series[80].to_string(), "37889062373143906");
    assert!(series.iter().all(|x| x.is_u64() || x.as_number().is_some_and(|n| !n.to_string().contains('.'))));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report", "--surd", "(1+sqrt(13))/3", "--order", "10", "--samples", "6", "--seed", "9"][..],
        &["montecarlo", "--samples", "12", "--depth", "120", "--seed", "3", "--json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn batch_verify_keeps_input_order() {
    let (code, v) = json(&["verify", "--cf", "[;(2)]", "--cf", "[;(1)]", "--cf", "[1,4;(1,1,3)]", "--order", "12"]);
    assert_eq!(code, 0);
    let texts: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["cf"]["text"].as_str().unwrap()).collect();
    assert_eq!(texts, ["[;(2)]", "[;(1)]", "[1,4;(1,1,3)]"]);
}

#[test]
fn failed_check_exits_one() {
    // a single shallow sample lands far from the almost-everywhere value
    let out = run(&["montecarlo", "--samples", "1", "--depth", "100", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("result: FAIL"));
}

#[test]
fn input_errors_exit_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["levy", "--cf", "[1;(2,x)]"], "position 6"),
        (&["expand", "--surd", "4/3"], "rational"),
        (&["expand", "--surd", "(1+sqrt(9))/2"], "rational"),
        (&["levy", "--cf", "[;(2)]", "--surd", "sqrt(2)/1"], "mutually exclusive"),
        (&["torus", "--matrix", "[[1,1],[0,1]]"], "hyperbolic"),
        (&["torus", "--matrix", "[[2,0],[0,1]]"], "determinant"),
        (&["genfun", "--matrix", "[[2,1],[1,1]]"], "not a matrix"),
        (&["levy", "--cf", "[;(2)]", "--depth", "1"], ""),
        (&["genfun"], "required"),
        (&["genfun", "--cf", "[;(1)]", "--precision", "20"], ""),
        (&["genfun", "--cf", "[;(1)]", "--order", "0"], ""),
        (&["levy", "--cf", "[[2,1],[1,1]]"], "grammar"),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
