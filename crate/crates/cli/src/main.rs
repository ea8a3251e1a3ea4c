//! `cfzeta`: continued fractions, generating functions, Levy constants and
//! toral zeta functions from the command line.

mod render;

use std::process::ExitCode;

use cfzeta::report::{self, Config, ReportError, Verdict};
use cfzeta::{parse_input, Input};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "cfzeta", version, about = "Exact continued-fraction and toral zeta computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Quadratic surd, e.g. "(-1+sqrt(5))/2" or "sqrt(2)/1"
    #[arg(long, global = true)]
    surd: Vec<String>,

    /// Eventually periodic continued fraction, e.g. "[1;(2)]" or "[;(1)]"
    #[arg(long, global = true)]
    cf: Vec<String>,

    /// Unimodular 2x2 integer matrix, e.g. "[[2,1],[1,1]]"
    #[arg(long, global = true)]
    matrix: Option<String>,

    /// Series truncation order (also the number of convergents and fixed-point counts)
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    order: u64,

    /// Working precision in bits for floating values
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(53..=100_000))]
    precision: u32,

    /// Monomial level r: generating functions of p_n^(r-s) q_n^s
    #[arg(long = "r", global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=64))]
    r: u64,

    /// Convergent index for the empirical Levy constant, or expansion depth for montecarlo
    #[arg(long, global = true)]
    depth: Option<usize>,

    /// Monte Carlo sample count
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Monte Carlo seed
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Continued fraction, conjugate and minimal polynomial of a surd
    Expand,
    /// Convergents p_n / q_n
    Convergents,
    /// Closed-form generating functions of the convergent monomials
    Genfun,
    /// Levy constant: exact, Birkhoff sum and empirical
    Levy,
    /// Fixed-point counts, entropy and primality of the toral automorphism
    Torus,
    /// Zeta function of the toral automorphism
    Zeta,
    /// Check the trace identity and its supporting identities
    Verify,
    /// Monte Carlo estimate of the almost-everywhere Levy constant
    Montecarlo,
    /// All of the above
    Report,
}

/// Bad input or configuration; exit code 2.
struct Failure(String);

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        Failure(e.to_string())
    }
}

/// A rendered report and whether its checks passed.
struct Outcome {
    value: serde_json::Value,
    passed: bool,
}

fn outcome<T: Serialize>(report: &T, passed: bool) -> Outcome {
    Outcome { value: serde_json::to_value(report).expect("reports serialize"), passed }
}

fn judged<T: Serialize + Verdict>(report: &T) -> Outcome {
    outcome(report, report.passed())
}

impl Cli {
    fn config(&self) -> Config {
        let defaults = Config::default();
        let (levy_depth, mc_depth) = match (self.command, self.depth) {
            (Command::Montecarlo, Some(d)) => (defaults.levy_depth, d),
            (_, Some(d)) => (d, defaults.mc_depth),
            (_, None) => (defaults.levy_depth, defaults.mc_depth),
        };
        Config {
            order: self.order as usize,
            precision: self.precision,
            r: self.r as usize,
            levy_depth,
            mc_depth,
            samples: self.samples,
            seed: self.seed,
        }
    }

    fn inputs(&self) -> Result<Vec<&str>, Failure> {
        let forms = [!self.surd.is_empty(), !self.cf.is_empty(), self.matrix.is_some()];
        if forms.iter().filter(|&&f| f).count() > 1 {
            return Err(Failure("--surd, --cf and --matrix are mutually exclusive".into()));
        }
        Ok(self.surd.iter().chain(&self.cf).chain(&self.matrix).map(String::as_str).collect())
    }

    /// Parses the single input this subcommand needs.
    fn input(&self) -> Result<(&str, Input), Failure> {
        match self.inputs()?.as_slice() {
            [] => Err(Failure("one of --surd, --cf or --matrix is required".into())),
            [text] => Ok((text, parse(self, text)?)),
            _ => Err(Failure("only `verify` accepts more than one input".into())),
        }
    }
}

fn parse(cli: &Cli, text: &str) -> Result<Input, Failure> {
    let input = parse_input(text).map_err(|e| Failure(format!("`{text}`: {e}")))?;
    // the flag names the grammar; reject text that parses as another form
    let ok = match input {
        Input::Surd(_) => !cli.surd.is_empty(),
        Input::Cf(_) => !cli.cf.is_empty(),
        Input::Matrix(_) => cli.matrix.is_some(),
    };
    if !ok {
        return Err(Failure(format!("`{text}` does not match the grammar of its flag")));
    }
    Ok(input)
}

fn quadratic(input: &Input, command: &'static str) -> Result<cfzeta::CFExpansion, Failure> {
    let cf = input.cf().map_err(ReportError::from)?;
    cf.ok_or(Failure(ReportError::NeedsQuadratic(command).to_string()))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = cli.config();
    Ok(match cli.command {
        Command::Expand => {
            let (text, input) = cli.input()?;
            outcome(&report::expand_report(text, &input, &cfg)?, true)
        }
        Command::Convergents => judged(&report::convergents_report(&quadratic(&cli.input()?.1, "convergents")?, &cfg)),
        Command::Genfun => judged(&report::genfun_report(&quadratic(&cli.input()?.1, "genfun")?, &cfg)?),
        Command::Levy => judged(&report::levy_json(&quadratic(&cli.input()?.1, "levy")?, &cfg)?),
        Command::Torus => {
            let input = cli.input()?.1;
            let t = input.automorphism().map_err(ReportError::from)?;
            let cf = input.cf().map_err(ReportError::from)?;
            judged(&report::torus_report(&t, cf.as_ref(), &cfg)?)
        }
        Command::Zeta => {
            let t = cli.input()?.1.automorphism().map_err(ReportError::from)?;
            judged(&report::zeta_report(&t, &cfg)?)
        }
        Command::Verify => verify(cli, &cfg)?,
        Command::Montecarlo => judged(&report::montecarlo_report(&cfg)?),
        Command::Report => {
            let (text, input) = cli.input()?;
            judged(&report::full_report(text, &input, &cfg)?)
        }
    })
}

/// One report per input, in input order; a lone input is not wrapped in a list.
fn verify(cli: &Cli, cfg: &Config) -> Result<Outcome, Failure> {
    let texts = cli.inputs()?;
    if texts.is_empty() {
        return Err(Failure("one of --surd or --cf is required".into()));
    }
    let cfs = texts.iter().map(|t| quadratic(&parse(cli, t)?, "verify")).collect::<Result<Vec<_>, _>>()?;
    let reports = cfs.par_iter().map(|cf| report::verify_report(cf, cfg)).collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(Verdict::passed);
    Ok(match reports.as_slice() {
        [one] => outcome(one, passed),
        _ => outcome(&reports, passed),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.value).expect("valid JSON"));
            } else {
                print!("{}", render::text(&out.value));
                println!("result: {}", if out.passed { "pass" } else { "FAIL" });
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
