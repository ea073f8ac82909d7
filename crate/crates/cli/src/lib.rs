//! Command-line front end for the `bifib` library.
//!
//! Rationals on the command line use the `p` / `p/q` text format, never
//! floating point. Exit codes: 0 on success (including verification runs
//! where every identity passes), 1 when a verification fails, 2 on usage or
//! parameter errors. Parameter errors never produce partial output on
//! standard output: each command renders its full output before printing.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bifib::matrixseq::{cassini_check, f_binet, f_det, f_recurrence};
use bifib::sequence::q_fast;
use bifib::series::{expand, gf_matrix};
use bifib::summation::{partial_sum_report, weighted_sum_report, SumReport};
use bifib::verify::{
    classical_two_term, run_all_verifications, verify_identity, Identity, VerifyReport,
};
use bifib::{Error, Mat2, Params, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "bifib",
    version,
    about = "Bi-periodic Fibonacci numbers and their 2x2 matrix sequence, in exact rational arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The `(a, b)` pair shared by most commands.
#[derive(Args, Debug)]
pub struct PairArgs {
    /// Even-step multiplier a, as `p` or `p/q` (nonzero).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rational,

    /// Odd-step multiplier b, as `p` or `p/q` (nonzero).
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rational,
}

impl PairArgs {
    fn params(&self) -> Result<Params, Error> {
        Params::new(self.a.clone(), self.b.clone())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the scalar term q_n (n >= -1).
    Q {
        #[command(flatten)]
        pair: PairArgs,
        /// Sequence index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Print the matrix term F_n computed by the recurrence (n >= 0).
    Matrix {
        #[command(flatten)]
        pair: PairArgs,
        /// Sequence index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Print det(F_n); it equals (-b/a)^(n mod 2).
    Det {
        #[command(flatten)]
        pair: PairArgs,
        /// Sequence index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Print both sides of the Cassini identity at index n (n >= 1).
    Cassini {
        #[command(flatten)]
        pair: PairArgs,
        /// Sequence index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Print F_n computed by the Binet formula over Q[sqrt(D)] (n >= 0).
    Binet {
        #[command(flatten)]
        pair: PairArgs,
        /// Sequence index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Dump generating-function coefficients F_0 .. F_{order-1}, one per line.
    Gf {
        #[command(flatten)]
        pair: PairArgs,
        /// Number of coefficients to print.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Compare the partial sum F_0 + ... + F_{n-1} with its closed form (n >= 1).
    Sum {
        #[command(flatten)]
        pair: PairArgs,
        /// Number of terms.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Compare the weighted sum of F_k x^(-k) for k <= n with its closed form (n >= 2).
    Wsum {
        #[command(flatten)]
        pair: PairArgs,
        /// Upper summation index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Evaluation point, as `p` or `p/q` (nonzero).
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
    },
    /// Sweep one identity, or all of them, and report pass/fail per identity.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        /// Identity to check (closed_form, determinant, cassini, binet, gf,
        /// sum_i, sum_ii, cor2, preset_fib, preset_pell, preset_k) or `all`.
        #[arg(long, default_value = "all")]
        identity: String,
        /// Largest index swept (at least 4).
        #[arg(long, default_value_t = 128)]
        n_max: i64,
    },
    /// Evaluate a classical specialization of q_n, cross-checked against an
    /// independently coded two-term recurrence.
    Preset {
        /// Which classical sequence.
        #[arg(long, value_enum)]
        which: PresetKind,
        /// Sequence index (n >= 0).
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Multiplier for the k-fibonacci preset.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetKind {
    Fibonacci,
    Pell,
    #[value(name = "k-fibonacci")]
    KFibonacci,
}

impl PresetKind {
    fn slug(self) -> &'static str {
        match self {
            PresetKind::Fibonacci => "fibonacci",
            PresetKind::Pell => "pell",
            PresetKind::KFibonacci => "k-fibonacci",
        }
    }
}

struct CliFailure {
    code: i32,
    message: String,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonInvertible | Error::InternalIrrationalResidue => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs one parsed invocation, writing output to `out` and diagnostics to
/// `err`, and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliFailure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Q { pair, n } => {
            let p = pair.params()?;
            let value = q_fast(&p, *n)?;
            Ok((scalar_output(fmt, &p, *n, "value", &value), 0))
        }
        Command::Matrix { pair, n } => {
            let p = pair.params()?;
            Ok((matrix_output(fmt, &f_recurrence(&p, *n)?), 0))
        }
        Command::Det { pair, n } => {
            let p = pair.params()?;
            let value = f_det(&p, *n)?;
            Ok((scalar_output(fmt, &p, *n, "det", &value), 0))
        }
        Command::Cassini { pair, n } => {
            let p = pair.params()?;
            let (lhs, rhs) = cassini_check(&p, *n)?;
            let text = match fmt {
                Format::Text => format!("lhs = {lhs}\nrhs = {rhs}\nequal = {}\n", lhs == rhs),
                Format::Json => {
                    let value = json!({
                        "a": p.a(), "b": p.b(), "n": n,
                        "lhs": lhs, "rhs": rhs, "equal": lhs == rhs,
                    });
                    format!("{value}\n")
                }
            };
            Ok((text, 0))
        }
        Command::Binet { pair, n } => {
            let p = pair.params()?;
            Ok((matrix_output(fmt, &f_binet(&p, *n)?), 0))
        }
        Command::Gf { pair, order } => {
            let p = pair.params()?;
            let series = expand(&gf_matrix(&p), *order)?;
            let mut text = String::new();
            for (i, c) in series.coefficients().iter().enumerate() {
                match fmt {
                    Format::Text => {
                        let _ = writeln!(text, "F_{i} = {c}");
                    }
                    Format::Json => {
                        let _ =
                            writeln!(text, "{}", serde_json::to_string(c).expect("serializable"));
                    }
                }
            }
            Ok((text, 0))
        }
        Command::Sum { pair, n } => {
            let p = pair.params()?;
            Ok((report_output(fmt, &partial_sum_report(&p, *n)?, None), 0))
        }
        Command::Wsum { pair, n, x } => {
            let p = pair.params()?;
            Ok((
                report_output(fmt, &weighted_sum_report(&p, *n, x)?, Some(x)),
                0,
            ))
        }
        Command::Verify {
            pair,
            identity,
            n_max,
        } => {
            let p = pair.params()?;
            if *n_max < 4 {
                return Err(CliFailure::usage("--n-max must be at least 4"));
            }
            let reports = if identity == "all" {
                run_all_verifications(&p, *n_max)
            } else {
                let id: Identity = identity
                    .parse()
                    .map_err(|e: String| CliFailure::usage(format!("--identity: {e}")))?;
                vec![verify_identity(&p, id, *n_max)]
            };
            let all_passed = reports.iter().all(|r| r.passed);
            let text = match fmt {
                Format::Text => {
                    let mut text = String::new();
                    for r in &reports {
                        let _ = writeln!(text, "{}", report_line(r));
                    }
                    text
                }
                Format::Json => {
                    format!(
                        "{}\n",
                        serde_json::to_string(&reports).expect("serializable")
                    )
                }
            };
            Ok((text, if all_passed { 0 } else { 1 }))
        }
        Command::Preset { which, n, k } => {
            let multiplier = match (which, k) {
                (PresetKind::Fibonacci, None) => 1,
                (PresetKind::Pell, None) => 2,
                (PresetKind::KFibonacci, Some(k)) => *k,
                (PresetKind::KFibonacci, None) => {
                    return Err(CliFailure::usage(
                        "--k is required for the k-fibonacci preset",
                    ))
                }
                (_, Some(_)) => {
                    return Err(CliFailure::usage(
                        "--k only applies to the k-fibonacci preset",
                    ))
                }
            };
            if *n < 0 {
                return Err(CliFailure::usage("--n must be at least 0 for presets"));
            }
            let p = Params::from_ints(multiplier, multiplier)?;
            let value = q_fast(&p, *n)?;
            let oracle = classical_two_term(&multiplier.into(), *n as usize + 1)
                .pop()
                .expect("nonempty");
            if value != Rational::from(oracle) {
                return Err(CliFailure {
                    code: 1,
                    message: format!(
                        "preset cross-check failed at n = {n}; this is a bug in bifib"
                    ),
                });
            }
            let text = match fmt {
                Format::Text => format!("{value}\n"),
                Format::Json => {
                    let value = json!({"which": which.slug(), "n": n, "value": value});
                    format!("{value}\n")
                }
            };
            Ok((text, 0))
        }
    }
}

fn scalar_output(fmt: Format, p: &Params, n: i64, key: &str, value: &Rational) -> String {
    match fmt {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let value = json!({"a": p.a(), "b": p.b(), "n": n, key: value});
            format!("{value}\n")
        }
    }
}

fn matrix_output(fmt: Format, m: &Mat2) -> String {
    match fmt {
        Format::Text => format!("{m}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(m).expect("serializable")),
    }
}

fn report_output(fmt: Format, report: &SumReport, x: Option<&Rational>) -> String {
    match fmt {
        Format::Text => {
            let mut text = String::new();
            if let Some(x) = x {
                let _ = writeln!(text, "x = {x}");
            }
            let _ = writeln!(text, "direct = {}", report.direct);
            let _ = writeln!(text, "closed = {}", report.closed);
            let _ = writeln!(text, "matches = {}", report.matches);
            text
        }
        Format::Json => format!("{}\n", serde_json::to_string(report).expect("serializable")),
    }
}

fn report_line(r: &VerifyReport) -> String {
    let status = if let Some(reason) = &r.skipped {
        format!("SKIPPED ({reason})")
    } else if r.passed {
        "PASS".to_string()
    } else {
        let first = r.failures.first().expect("failed report has failures");
        format!(
            "FAIL ({} failure(s), first at index {})",
            r.failures.len(),
            first.index
        )
    };
    format!(
        "{:<12} a={} b={} n_max={}: {status}",
        r.identity.slug(),
        r.a,
        r.b,
        r.n_max
    )
}
