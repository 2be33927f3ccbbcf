use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error(
        "integration did not converge after {subdivisions} subdivisions \
         (value {value:e}, error estimate {error:e}, tolerance {tolerance:e})"
    )]
    NonConvergence {
        subdivisions: usize,
        value: f64,
        error: f64,
        tolerance: f64,
    },

    #[error("no interior peak on [{lo}, {hi}]")]
    NoInteriorPeak { lo: f64, hi: f64 },

    #[error("non-integrable spectrum: `{0}` diverges at high frequency")]
    NonIntegrable(&'static str),

    #[error("partition sum tail too large with {given} terms; at least {required} are needed")]
    TailTooLarge { given: usize, required: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("support exceeds grid: boundary/peak ratio {ratio:e} is above {threshold:e}")]
    SupportExceedsGrid { ratio: f64, threshold: f64 },

    #[error("undefined ratio: {0}")]
    UndefinedRatio(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
