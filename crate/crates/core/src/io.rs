//! CSV/JSON artifacts and state input.
//!
//! Grids are written with symmetric labels `m, n ∈ [-h, h]`, `m` major.
//! Numbers carry 17 significant digits so that outputs diff cleanly.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64 as C64;
use serde_json::{json, Value};

use crate::continuum::{gaussian_state, CartesianScaling, ConvergenceReport};
use crate::error::{Error, Result};
use crate::mapping::PhaseSpaceFunction;
use crate::schwinger::{Dimension, StateVector};
use crate::wigner::WignerGrid;

/// Output flavour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// 17 significant digits.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

fn labels_tag(dim: Dimension) -> String {
    format!("[-{h},{h}]", h = dim.h())
}

fn comment_block(comments: &[String]) -> String {
    comments.iter().map(|c| format!("# {c}\n")).collect()
}

pub fn wigner_csv(grid: &WignerGrid, comments: &[String]) -> String {
    let dim = grid.dim();
    let mut out = comment_block(comments);
    out.push_str("m,n,value\n");
    for m in dim.labels() {
        for n in dim.labels() {
            let _ = writeln!(out, "{m},{n},{}", fmt_num(grid.get(m, n)));
        }
    }
    out
}

pub fn wigner_json(grid: &WignerGrid, extra: &[(&str, Value)]) -> Value {
    let dim = grid.dim();
    let values: Vec<Vec<f64>> = dim.labels().map(|m| dim.labels().map(|n| grid.get(m, n)).collect()).collect();
    let mut obj = json!({ "N": dim.n(), "labels": labels_tag(dim), "values": values });
    for (k, v) in extra {
        obj[*k] = v.clone();
    }
    obj
}

/// Complex representative: columns `m,n,re,im`.
pub fn function_csv(f: &PhaseSpaceFunction, comments: &[String]) -> String {
    let dim = f.dim();
    let mut out = comment_block(comments);
    out.push_str("m,n,re,im\n");
    for m in dim.labels() {
        for n in dim.labels() {
            let z = f.get(m, n);
            let _ = writeln!(out, "{m},{n},{},{}", fmt_num(z.re), fmt_num(z.im));
        }
    }
    out
}

/// Complex representative: `values[m][n] = [re, im]`.
pub fn function_json(f: &PhaseSpaceFunction, extra: &[(&str, Value)]) -> Value {
    let dim = f.dim();
    let values: Vec<Vec<[f64; 2]>> = dim
        .labels()
        .map(|m| dim.labels().map(|n| { let z = f.get(m, n); [z.re, z.im] }).collect())
        .collect();
    let mut obj = json!({ "N": dim.n(), "labels": labels_tag(dim), "values": values });
    for (k, v) in extra {
        obj[*k] = v.clone();
    }
    obj
}

/// Two real grids side by side: columns `m,n,<name_a>,<name_b>`.
pub fn pair_csv(names: [&str; 2], a: &PhaseSpaceFunction, b: &PhaseSpaceFunction) -> String {
    let dim = a.dim();
    let mut out = format!("m,n,{},{}\n", names[0], names[1]);
    for m in dim.labels() {
        for n in dim.labels() {
            let _ = writeln!(out, "{m},{n},{},{}", fmt_num(a.get(m, n).re), fmt_num(b.get(m, n).re));
        }
    }
    out
}

pub fn pair_json(names: [&str; 2], a: &PhaseSpaceFunction, b: &PhaseSpaceFunction) -> Value {
    let dim = a.dim();
    let grid = |f: &PhaseSpaceFunction| -> Vec<Vec<f64>> {
        dim.labels().map(|m| dim.labels().map(|n| f.get(m, n).re).collect()).collect()
    };
    let mut obj = json!({ "N": dim.n(), "labels": labels_tag(dim) });
    obj[names[0]] = json!(grid(a));
    obj[names[1]] = json!(grid(b));
    obj
}

pub fn report_csv(report: &ConvergenceReport) -> String {
    let mut out = format!("# norm={}\nN,error\n", report.norm);
    for (n, e) in report.dims.iter().zip(&report.errors) {
        let _ = writeln!(out, "{n},{}", fmt_num(*e));
    }
    out
}

pub fn report_json(report: &ConvergenceReport) -> Value {
    serde_json::to_value(report).expect("report serialises")
}

pub fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serialises");
    s.push('\n');
    s
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Where a pure state comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSource {
    /// `|u_k⟩`
    U(i64),
    /// `|v_k⟩`
    V(i64),
    /// Discretised Gaussian on the Cartesian grid.
    Gaussian { sigma: f64, delta: f64 },
    /// Haar-random state from a seeded generator.
    Random { seed: u64 },
    /// JSON list of `[re, im]` pairs.
    File(PathBuf),
}

impl StateSource {
    /// `u<k>`, `v<k>`, `gaussian`, `random`, or a file path.
    pub fn parse(spec: &str, sigma: f64, delta: f64, seed: u64) -> Self {
        let preset = |prefix: char| -> Option<i64> {
            spec.strip_prefix(prefix).and_then(|rest| rest.parse::<i64>().ok())
        };
        if let Some(k) = preset('u') {
            Self::U(k)
        } else if let Some(k) = preset('v') {
            Self::V(k)
        } else if spec == "gaussian" {
            Self::Gaussian { sigma, delta }
        } else if spec == "random" {
            Self::Random { seed }
        } else {
            Self::File(PathBuf::from(spec))
        }
    }
}

/// Tolerated norm deviation of a state file before renormalisation.
pub const STATE_FILE_NORM_TOLERANCE: f64 = 1e-6;

/// Parses a JSON list of `[re, im]` pairs of length `N`.
pub fn parse_state_json(text: &str, dim: Dimension) -> Result<StateVector> {
    let value: Value = serde_json::from_str(text)?;
    let items = value.as_array().ok_or_else(|| Error::Input("state file must hold a JSON list".into()))?;
    if items.len() != dim.n() {
        return Err(Error::Input(format!("expected {} amplitudes, found {}", dim.n(), items.len())));
    }
    let amps = items
        .iter()
        .enumerate()
        .map(|(i, item)| match item.as_array().map(|p| p.as_slice()) {
            Some([re, im]) => match (re.as_f64(), im.as_f64()) {
                (Some(re), Some(im)) => Ok(C64::new(re, im)),
                _ => Err(Error::Input(format!("amplitude {i} is not numeric"))),
            },
            _ => Err(Error::Input(format!("amplitude {i} is not a [re, im] pair"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let state = StateVector::new(amps)?;
    let norm = state.norm();
    if (norm - 1.0).abs() > STATE_FILE_NORM_TOLERANCE {
        return Err(Error::Input(format!("state norm {norm} deviates from 1 by more than {STATE_FILE_NORM_TOLERANCE}")));
    }
    StateVector::normalized(state.amplitudes().to_vec())
}

/// Builds the normalised state named by `source`.
pub fn load_state(source: &StateSource, dim: Dimension) -> Result<StateVector> {
    use rand::SeedableRng;
    match source {
        StateSource::U(k) => Ok(StateVector::u_eigenstate(*k, dim)),
        StateSource::V(k) => Ok(StateVector::v_eigenstate(*k, dim)),
        StateSource::Gaussian { sigma, delta } => {
            if !(*sigma > 0.0) {
                return Err(Error::Parameter(format!("sigma must be positive, got {sigma}")));
            }
            gaussian_state(&CartesianScaling::unit(dim, *delta)?, *sigma)
        }
        StateSource::Random { seed } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            Ok(StateVector::random(dim, &mut rng))
        }
        StateSource::File(path) => parse_state_json(&std::fs::read_to_string(path)?, dim),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: i64) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn presets() {
        let d = dim(3);
        let u0 = load_state(&StateSource::parse("u0", 1.0, 1.0, 0), d).unwrap();
        assert_eq!(u0.amplitudes(), &[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]);
        let v0 = load_state(&StateSource::parse("v0", 1.0, 1.0, 0), d).unwrap();
        for a in v0.amplitudes() {
            assert!((a.re - 1.0 / 3f64.sqrt()).abs() < 1e-15 && a.im.abs() < 1e-15);
        }
        assert_eq!(StateSource::parse("u-1", 1.0, 1.0, 0), StateSource::U(-1));
        assert_eq!(StateSource::parse("state.json", 1.0, 1.0, 0), StateSource::File("state.json".into()));
    }

    #[test]
    fn three_four_five_file() {
        let s = parse_state_json("[[0.6,0],[0.8,0],[0,0]]", dim(3)).unwrap();
        assert_eq!(s.norm(), 1.0);
        assert_eq!(s.amplitudes()[1], C64::new(0.8, 0.0));
    }

    #[test]
    fn bad_files() {
        let d = dim(3);
        assert!(matches!(parse_state_json("[[1,0],[0,0]]", d), Err(Error::Input(_))));
        assert!(matches!(parse_state_json("[[1,0],[0,\"x\"],[0,0]]", d), Err(Error::Input(_))));
        assert!(matches!(parse_state_json("[[1,0],[0],[0,0]]", d), Err(Error::Input(_))));
        assert!(matches!(parse_state_json("[[1,0],[1,0],[0,0]]", d), Err(Error::Input(_))));
        assert!(parse_state_json("{\"a\":1}", d).is_err());
        assert!(parse_state_json("not json", d).is_err());
        // within 1e-6 of unit norm is accepted and renormalised
        let s = parse_state_json("[[1.0000001,0],[0,0],[0,0]]", d).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn number_format_has_17_digits() {
        assert_eq!(fmt_num(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(fmt_num(0.0), "0.0000000000000000e0");
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "a\n").unwrap();
        write_atomic(&path, "b\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "b\n");
    }
}
