use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dyad ({lo}, {hi}): requires lo < hi and lo >= 1")]
    InvalidDyad { lo: u32, hi: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("probability {value} for dyad ({i}, {j}) lies outside [0, 1]")]
    ProbabilityOutOfRange { i: u32, j: u32, value: f64 },

    #[error("duplicate class {0} passed to the poset builder")]
    DuplicateClass(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("too few tail observations: got {got}, need at least {need}")]
    TooFewTailPoints { got: usize, need: usize },

    #[error("degenerate tail: {0}")]
    DegenerateTail(String),

    #[error("no power-law tail: {0}")]
    NoPowerLaw(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
