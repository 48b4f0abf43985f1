use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("zero direction")]
    ZeroDirection,

    #[error("ambient dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("{count} vertex combinations exceed the cap of {cap}")]
    ComboCap { count: u128, cap: u128 },

    #[error("unbounded polyhedron: vertex enumeration needs a polytope")]
    Unbounded,

    #[error("profile has no society")]
    MissingSociety,

    #[error("invalid profile: {}", .0.join("; "))]
    InvalidProfile(Vec<String>),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("precondition unmet: {0}")]
    Precondition(String),

    #[error("separation invalid: {0}")]
    InvalidSeparation(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
