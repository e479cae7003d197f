use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A dense object would exceed the configured size cap.
    #[error("resource cap exceeded: {what} needs dimension {dim}, cap is {cap}")]
    ResourceCap {
        what: String,
        dim: usize,
        cap: usize,
    },

    #[error("input is not a Leibniz algebra: {0}")]
    NotLeibniz(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid naive representation: {0}")]
    InvalidNaiveRepresentation(String),

    #[error("map fails the graph condition: {0}")]
    InvalidGraphMap(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// A mathematical invariant that should hold for valid input was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn dimension(what: &'static str, expected: usize, got: usize) -> Self {
        Error::DimensionMismatch {
            what,
            expected,
            got,
        }
    }
}
