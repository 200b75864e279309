use thiserror::Error;

pub type Result<T, E = LabError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("sieve limit must be at least 1")]
    EmptySieve,

    #[error("divisor table covers n <= {limit} but {needed} is required")]
    SieveTooSmall { needed: u64, limit: usize },

    #[error("integer overflow while accumulating {0}")]
    Overflow(&'static str),

    #[error("t = {t} is below the asymptotic threshold t_min = {t_min}")]
    BelowThreshold { t: f64, t_min: f64 },

    #[error("zeta has a pole at s = 1")]
    Pole,

    #[error("step dt = {dt} does not resolve the oscillation on this range (max {max:.6})")]
    UnresolvedStep { dt: f64, max: f64 },

    #[error("T = {0} is too small: the main terms need T > e")]
    HeightTooSmall(f64),

    #[error("sample cache: {0}")]
    Cache(String),

    #[error("{0}")]
    InvalidArgument(String),
}

impl LabError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        LabError::InvalidArgument(msg.into())
    }
}

impl From<std::io::Error> for LabError {
    fn from(e: std::io::Error) -> Self {
        LabError::Cache(e.to_string())
    }
}
