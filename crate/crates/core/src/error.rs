use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be an odd positive integer, got {0}")]
    Dimension(i64),

    #[error("label ({j}, {l}) outside [-{h}, {h}]")]
    Label { j: i64, l: i64, h: i64 },

    #[error("shape mismatch: expected dimension {expected}, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("state norm {norm} deviates from 1")]
    Normalization { norm: f64 },

    #[error("invalid density operator: {0}")]
    Density(String),

    #[error("delta must lie in the open interval (0, 2), got {0}")]
    Scaling(f64),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("sigma {sigma} outside the resolvable range [{min}, {max}] for N = {n}")]
    Resolution { sigma: f64, min: f64, max: f64, n: usize },

    #[error("angular momentum cutoff {m_max} must be below h = {h}")]
    Embedding { m_max: usize, h: i64 },

    #[error("reference angle {0} is not an integer multiple of 2π/N")]
    ReferenceAngle(f64),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
