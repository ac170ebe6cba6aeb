//! Command-line front end for exact power-sum coefficients.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 usage error.

pub mod bench;
pub mod format;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use faulhaber_core::{bernoulli_numbers, evaluate_row, power_sum_bruteforce, Convention, Method};

pub use format::OutputFormat;
pub use verify::{run_verify, VerifyOptions, VerifyReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Degrees above this get a warning on stderr; they still run.
pub const SOFT_DEGREE_LIMIT: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact coefficients of 1^p + ... + n^p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MethodArg {
    #[default]
    Direct,
    Lemma,
    Bernoulli,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Direct => Method::Direct,
            MethodArg::Lemma => Method::Lemma,
            MethodArg::Bernoulli => Method::Bernoulli,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ConventionArg {
    #[default]
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients a_1..a_{p+1} of 1^p + ... + n^p
    Coeffs {
        p: usize,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the value of 1^p + ... + n^p
    Eval {
        p: usize,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        /// Cross-check against direct summation
        #[arg(long)]
        check: bool,
    },
    /// Compare all routes, operation counts and identities for p in 0..=p_max
    Verify {
        p_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Add 1 to coefficient a_INDEX of the direct row for degree P
        #[arg(long, value_name = "P:INDEX", hide = true)]
        inject_fault: Option<verify::Fault>,
    },
    /// Measured and predicted operation counts on a geometric schedule
    Bench { p_max: usize },
    /// Print Bernoulli numbers b_0..b_m
    Bernoulli {
        m: usize,
        #[arg(long, value_enum, default_value_t)]
        convention: ConventionArg,
    },
}

fn warn_large(p: usize, err: &mut dyn Write) {
    if p > SOFT_DEGREE_LIMIT {
        let _ = writeln!(
            err,
            "warning: p = {p} exceeds {SOFT_DEGREE_LIMIT}; this may take a long time"
        );
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(
    cmd: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, Box<dyn std::error::Error>> {
    match cmd {
        Command::Coeffs { p, method, format } => {
            warn_large(p, err);
            let row = Method::from(method).coefficients(p)?;
            writeln!(out, "{}", format::render(&row, format))?;
            Ok(EXIT_OK)
        }
        Command::Eval {
            p,
            n,
            method,
            check,
        } => {
            warn_large(p, err);
            let row = Method::from(method).coefficients(p)?;
            let value = evaluate_row(&row, n);
            let Some(int) = value.to_integer() else {
                writeln!(err, "error: f_{p}({n}) evaluated to non-integer {value}")?;
                return Ok(EXIT_FAILURE);
            };
            if check {
                let p32 = u32::try_from(p).map_err(|_| "p too large for direct summation")?;
                let expected = power_sum_bruteforce(p32, n)?;
                if expected != int {
                    writeln!(out, "{int}")?;
                    writeln!(err, "check failed: direct summation gives {expected}")?;
                    return Ok(EXIT_FAILURE);
                }
            }
            writeln!(out, "{int}")?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            p_max,
            jobs,
            inject_fault,
        } => {
            warn_large(p_max, err);
            let report = run_verify(
                p_max,
                &VerifyOptions {
                    jobs,
                    fault: inject_fault,
                },
            );
            writeln!(out, "{report}")?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Bench { p_max } => {
            warn_large(p_max, err);
            let rows = bench::run_bench(p_max);
            write!(out, "{}", bench::render(&rows))?;
            Ok(if rows.iter().all(bench::BenchRow::matches) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Bernoulli { m, convention } => {
            let table = bernoulli_numbers(m);
            let convention = match convention {
                ConventionArg::Plus => Convention::Plus,
                ConventionArg::Minus => Convention::Minus,
            };
            for (i, b) in table.values(convention).iter().enumerate() {
                writeln!(out, "{i}: {b}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("faulhaber").chain(args.iter().copied()))
            .expect("valid arguments");
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn coeffs_outputs() {
        assert_eq!(
            run_args(&["coeffs", "2", "--format", "plain"]).1,
            "a_1=1/6 a_2=1/2 a_3=1/3\n"
        );
        assert_eq!(
            run_args(&["coeffs", "0", "--format", "json"]).1,
            "{\"p\":0,\"coefficients\":[\"1\"]}\n"
        );
        assert_eq!(
            run_args(&["coeffs", "3", "--format", "latex"]).1,
            "\\frac{1}{4}n^{4}+\\frac{1}{2}n^{3}+\\frac{1}{4}n^{2}\n"
        );
    }

    #[test]
    fn methods_agree_byte_for_byte() {
        for p in ["0", "5", "10"] {
            for fmt in ["plain", "json", "latex"] {
                let outs: Vec<_> = ["direct", "lemma", "bernoulli"]
                    .iter()
                    .map(|m| run_args(&["coeffs", p, "--method", m, "--format", fmt]).1)
                    .collect();
                assert_eq!(outs[0], outs[1]);
                assert_eq!(outs[0], outs[2]);
            }
        }
    }

    #[test]
    fn eval_outputs() {
        assert_eq!(run_args(&["eval", "2", "3"]).1, "14\n");
        assert_eq!(run_args(&["eval", "5", "1"]).1, "1\n");
        assert_eq!(run_args(&["eval", "0", "9", "--check"]).1, "9\n");
        assert_eq!(
            run_args(&["eval", "7", "50", "--check", "--method", "lemma"]).0,
            EXIT_OK
        );
    }

    #[test]
    fn usage_errors_are_rejected_by_parser() {
        for args in [
            vec!["eval", "2", "0"],
            vec!["coeffs", "-1"],
            vec!["coeffs", "1.5"],
            vec!["coeffs", "2", "--format", "xml"],
            vec!["bernoulli", "3", "--convention", "neutral"],
        ] {
            let e = Cli::try_parse_from(std::iter::once("faulhaber").chain(args.iter().copied()))
                .unwrap_err();
            assert_eq!(e.exit_code(), EXIT_USAGE as i32, "{args:?}");
        }
    }

    #[test]
    fn bernoulli_outputs() {
        assert_eq!(
            run_args(&["bernoulli", "1", "--convention", "plus"]).1,
            "0: 1\n1: 1/2\n"
        );
        assert_eq!(
            run_args(&["bernoulli", "1", "--convention", "minus"]).1,
            "0: 1\n1: -1/2\n"
        );
        let b4 = run_args(&["bernoulli", "4"]).1;
        assert!(b4.lines().any(|l| l == "4: -1/30"), "{b4}");
    }

    #[test]
    fn verify_and_fault() {
        let (code, out, _) = run_args(&["verify", "5", "--jobs", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let (code, out, _) = run_args(&["verify", "5", "--inject-fault", "3:1"]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(out.contains("p=3 direct/bernoulli differ at a_1"), "{out}");
    }

    #[test]
    fn bench_output() {
        let (code, out, _) = run_args(&["bench", "100"]);
        assert_eq!(code, EXIT_OK);
        let row = |p: &str| -> Vec<String> {
            out.lines()
                .map(|l| l.split_whitespace().map(String::from).collect::<Vec<_>>())
                .find(|cols| cols[0] == p)
                .unwrap()
        };
        assert_eq!(row("3")[1..5], ["9", "9", "6", "6"]);
        assert_eq!(row("0")[1..5], ["0", "0", "0", "0"]);
        assert_eq!(row("100")[1..5], ["5150", "5150", "5050", "5050"]);
    }

    #[test]
    fn large_degree_warns() {
        let mut err = Vec::new();
        warn_large(SOFT_DEGREE_LIMIT + 1, &mut err);
        assert!(String::from_utf8(err).unwrap().starts_with("warning:"));
        let mut quiet = Vec::new();
        warn_large(SOFT_DEGREE_LIMIT, &mut quiet);
        assert!(quiet.is_empty());
    }
}
