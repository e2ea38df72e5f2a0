use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {x} lies outside [-1, 1]")]
    Domain { x: f64 },

    #[error("dimension mismatch for {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("degree L = {degree} exceeds 2N+1 for {nodes} nodes")]
    DegreeTooLarge { degree: usize, nodes: usize },

    #[error("quadrature rule basis does not match the fit basis")]
    BasisMismatch,

    #[error("tridiagonal eigensolver failed to converge for N = {n}")]
    EigenNoConvergence { n: usize },

    #[error("panel refinement did not converge: last estimate {last}, previous {previous}")]
    RefinementNoConvergence { last: f64, previous: f64 },

    #[error("invalid penalty: {0}")]
    InvalidPenalty(String),

    #[error("unsupported penalty profile: the l2 barycentric form requires a constant, finite mu")]
    UnsupportedPenaltyProfile,

    #[error("SNR is undefined for an all-zero signal")]
    UndefinedSnr,

    #[error("invalid noise level: {0}")]
    InvalidSnr(f64),

    #[error("Airy integration failed at t = {t}")]
    AiryIntegration { t: f64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid samples: {0}")]
    InvalidSamples(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("assertion failed: {0}")]
    Assertion(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub(crate) fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            what,
            expected,
            found,
        })
    }
}
