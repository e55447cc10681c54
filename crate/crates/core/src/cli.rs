//! Command-line front end.

use std::f64::consts::FRAC_1_SQRT_2;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::basis::build_all;
use crate::continuum::{
    angular_convergence, build_m_theta, build_pq, cartesian_convergence, pegg_barnett_map, AngularScaling,
    CartesianScaling, ConvergenceReport,
};
use crate::error::Error;
use crate::io::{self, Format, StateSource};
use crate::linalg::ComplexMatrix;
use crate::mapping::map_operator;
use crate::schwinger::{build_u, build_v, Dimension, StateVector};
use crate::verify::{basis_checks, kernel_check, verify_all, CheckResult};
use crate::wigner::wigner_fast;

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "phasespace", version, about = "Discrete quantum phase space toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Destination file; standard output when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unit trace, Hermiticity, orthogonality, completeness and kernel checks.
    BasisCheck {
        /// One or more odd dimensions.
        #[arg(long = "N", value_delimiter = ',', required = true, allow_negative_numbers = true)]
        n: Vec<i64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Phase-space representative (1/N) Tr[G(m,n) O] of an operator.
    Map {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        /// identity, U, V, Q, P, M, theta, proj-u<k>, proj-v<k> or random.
        #[arg(long)]
        op: String,
        /// Scaling exponent for Q and P.
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Discrete Wigner function of a pure state.
    Wigner {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        /// u<k>, v<k>, gaussian, random or a JSON file of [re, im] pairs.
        #[arg(long)]
        state: String,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Convergence of a Gaussian towards the Weyl-Wigner Gaussian.
    LimitCartesian {
        #[arg(long, value_delimiter = ',', default_value = "21,51,101,201")]
        dims: Vec<i64>,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Convergence of an angular momentum superposition towards the angular
    /// Wigner function.
    LimitAngular {
        #[arg(long, value_delimiter = ',', default_value = "21,51,101")]
        dims: Vec<i64>,
        /// Amplitudes for m = -M..M as `re` or `re:im`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        coeffs: Option<Vec<String>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Number and phase representatives.
    PeggBarnett {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta_ref: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Every numerical self-check.
    VerifyAll {
        #[arg(long = "N", value_delimiter = ',', default_value = "3,5,7", allow_negative_numbers = true)]
        n: Vec<i64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(#[from] Error),
    #[error("{failed} check(s) failed")]
    CheckFailed { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Invalid(Error::Io(_)) => 1,
            Self::Usage(_) | Self::Invalid(_) => 2,
            Self::CheckFailed { .. } => 1,
        }
    }
}

fn dims(values: &[i64]) -> Result<Vec<Dimension>, CliError> {
    values.iter().map(|&n| Dimension::new(n).map_err(CliError::from)).collect()
}

/// `re` or `re:im`.
pub fn parse_coefficient(token: &str) -> Result<C64, CliError> {
    let bad = || CliError::Usage(format!("invalid coefficient {token:?}, expected re or re:im"));
    let mut parts = token.trim().splitn(2, ':');
    let re = parts.next().unwrap_or("").parse::<f64>().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(s) => s.parse::<f64>().map_err(|_| bad())?,
        None => 0.0,
    };
    Ok(C64::new(re, im))
}

fn operator(name: &str, dim: Dimension, delta: f64, seed: u64) -> Result<ComplexMatrix, CliError> {
    let n = dim.n();
    let projector = |state: StateVector| ComplexMatrix::outer(state.amplitudes(), state.amplitudes());
    let label = |rest: &str| -> Result<i64, CliError> {
        rest.parse::<i64>().map_err(|_| CliError::Usage(format!("invalid operator {name:?}")))
    };
    Ok(match name {
        "identity" | "I" => ComplexMatrix::identity(n),
        "U" => build_u(dim),
        "V" => build_v(dim),
        "Q" => build_pq(&CartesianScaling::unit(dim, delta)?)?.1,
        "P" => build_pq(&CartesianScaling::unit(dim, delta)?)?.0,
        "M" => build_m_theta(&AngularScaling::unit(dim))?.0,
        "theta" => build_m_theta(&AngularScaling::unit(dim))?.1,
        "random" => ComplexMatrix::random_hermitian(n, &mut ChaCha8Rng::seed_from_u64(seed)),
        _ => {
            if let Some(rest) = name.strip_prefix("proj-u") {
                projector(StateVector::u_eigenstate(label(rest)?, dim))
            } else if let Some(rest) = name.strip_prefix("proj-v") {
                projector(StateVector::v_eigenstate(label(rest)?, dim))
            } else {
                return Err(CliError::Usage(format!(
                    "unknown operator {name:?}; expected identity, U, V, Q, P, M, theta, proj-u<k>, proj-v<k> or random"
                )));
            }
        }
    })
}

fn check_label(k: i64, dim: Dimension) -> Result<(), CliError> {
    if dim.contains(k) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("label {k} outside [-{h}, {h}]", h = dim.h())))
    }
}

fn emit(out: &OutputArgs, text: String, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &out.output {
        Some(path) => io::write_atomic(path, &text)?,
        None => stdout.write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(())
}

fn report_text(report: &ConvergenceReport, format: Format, params: &[(&str, serde_json::Value)]) -> String {
    match format {
        Format::Csv => {
            let header: String = params.iter().map(|(k, v)| format!("# {k}={v}\n")).collect();
            header + &io::report_csv(report)
        }
        Format::Json => {
            let mut value = io::report_json(report);
            for (k, v) in params {
                value[*k] = v.clone();
            }
            io::json_string(&value)
        }
    }
}

fn summarise(results: &[(Dimension, Vec<CheckResult>)], seed: u64, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut text = format!("# seed={seed}\n");
    let mut failed = 0;
    for (dim, checks) in results {
        for check in checks {
            text.push_str(&format!("N={} {check}\n", dim.n()));
            failed += usize::from(!check.passed);
        }
    }
    text.push_str(&format!("{} checks, {failed} failed\n", results.iter().map(|(_, c)| c.len()).sum::<usize>()));
    stdout.write_all(text.as_bytes()).map_err(Error::from)?;
    if failed > 0 {
        Err(CliError::CheckFailed { failed })
    } else {
        Ok(())
    }
}

/// Runs one command, writing the artifact to `--output` or `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::BasisCheck { n, seed } => {
            let results = dims(&n)?
                .into_iter()
                .map(|dim| {
                    let basis = build_all(dim);
                    let mut checks = basis_checks(&basis);
                    checks.push(kernel_check(&basis, &mut ChaCha8Rng::seed_from_u64(seed)));
                    (dim, checks)
                })
                .collect::<Vec<_>>();
            summarise(&results, seed, stdout)
        }
        Command::VerifyAll { n, seed } => {
            let results = dims(&n)?.into_iter().map(|dim| (dim, verify_all(dim, seed))).collect::<Vec<_>>();
            summarise(&results, seed, stdout)
        }
        Command::Map { n, op, delta, seed, out } => {
            let dim = Dimension::new(n)?;
            let f = map_operator(&operator(&op, dim, delta, seed)?, &build_all(dim))?;
            let mut comments = vec![format!("op={op}")];
            if op == "random" {
                comments.push(format!("seed={seed}"));
            }
            let text = match out.format {
                Format::Csv => io::function_csv(&f, &comments),
                Format::Json => {
                    let mut extra = vec![("op", json!(op))];
                    if op == "random" {
                        extra.push(("seed", json!(seed)));
                    }
                    io::json_string(&io::function_json(&f, &extra))
                }
            };
            emit(&out, text, stdout)
        }
        Command::Wigner { n, state, sigma, delta, seed, out } => {
            let dim = Dimension::new(n)?;
            let source = StateSource::parse(&state, sigma, delta, seed);
            if let StateSource::U(k) | StateSource::V(k) = source {
                check_label(k, dim)?;
            }
            let grid = wigner_fast(&io::load_state(&source, dim)?)?;
            let random = matches!(source, StateSource::Random { .. });
            let text = match out.format {
                Format::Csv => {
                    let comments = if random { vec![format!("seed={seed}")] } else { Vec::new() };
                    io::wigner_csv(&grid, &comments)
                }
                Format::Json => {
                    let mut extra = vec![("state", json!(state))];
                    if random {
                        extra.push(("seed", json!(seed)));
                    }
                    io::json_string(&io::wigner_json(&grid, &extra))
                }
            };
            emit(&out, text, stdout)
        }
        Command::LimitCartesian { dims: d, sigma, delta, out } => {
            let report = cartesian_convergence(sigma, &dims(&d)?, delta)?;
            let text = report_text(&report, out.format, &[("sigma", json!(sigma)), ("delta", json!(delta))]);
            emit(&out, text, stdout)
        }
        Command::LimitAngular { dims: d, coeffs, out } => {
            let coeffs = match coeffs {
                Some(tokens) => tokens.iter().map(|t| parse_coefficient(t)).collect::<Result<Vec<_>, _>>()?,
                None => vec![C64::new(0.0, 0.0), C64::new(FRAC_1_SQRT_2, 0.0), C64::new(FRAC_1_SQRT_2, 0.0)],
            };
            let report = angular_convergence(&coeffs, &dims(&d)?)?;
            let listed: Vec<[f64; 2]> = coeffs.iter().map(|c| [c.re, c.im]).collect();
            let text = report_text(&report, out.format, &[("coeffs", json!(listed))]);
            emit(&out, text, stdout)
        }
        Command::PeggBarnett { n, theta_ref, out } => {
            let dim = Dimension::new(n)?;
            let (number, phase) = pegg_barnett_map(theta_ref, dim, &build_all(dim))?;
            let names = ["number", "phase"];
            let text = match out.format {
                Format::Csv => format!("# theta_ref={}\n", io::fmt_num(theta_ref)) + &io::pair_csv(names, &number, &phase),
                Format::Json => {
                    let mut value = io::pair_json(names, &number, &phase);
                    value["theta_ref"] = json!(theta_ref);
                    io::json_string(&value)
                }
            };
            emit(&out, text, stdout)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("phasespace").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let result = run(cli, &mut buf);
        (result, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn coefficient_tokens() {
        assert_eq!(parse_coefficient("0.5").unwrap(), C64::new(0.5, 0.0));
        assert_eq!(parse_coefficient("0.5:-1").unwrap(), C64::new(0.5, -1.0));
        assert!(parse_coefficient("x").is_err());
        assert!(parse_coefficient("1:y").is_err());
    }

    #[test]
    fn wigner_u0_csv() {
        let (r, text) = run_args(&["wigner", "--N", "3", "--state", "u0"]);
        r.unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "m,n,value");
        assert_eq!(lines.len(), 10);
        for line in &lines[1..] {
            let f: Vec<&str> = line.split(',').collect();
            let v: f64 = f[2].parse().unwrap();
            let expected = if f[0] == "0" { 1.0 / 3.0 } else { 0.0 };
            assert!((v - expected).abs() < 1e-14, "{line}");
        }
    }

    #[test]
    fn even_dimension_is_usage_error() {
        let (r, _) = run_args(&["wigner", "--N", "4", "--state", "u0"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_args(&["wigner", "--N", "3", "--state", "u5"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn random_state_records_seed() {
        let (r, text) = run_args(&["wigner", "--N", "3", "--state", "random", "--seed", "7"]);
        r.unwrap();
        assert!(text.starts_with("# seed=7\n"));
    }

    #[test]
    fn unknown_operator() {
        let (r, _) = run_args(&["map", "--N", "3", "--op", "W"]);
        assert!(matches!(r, Err(CliError::Usage(_))));
    }
}
