use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set must contain at least one point")]
    EmptyPointSet,

    #[error("point {index} ({x}, {y}) exceeds the coordinate bound |c| <= 2^30")]
    CoordinateOutOfRange { index: usize, x: i64, y: i64 },

    #[error("duplicate point: indices {first} and {second} are both ({x}, {y})")]
    DuplicatePoint {
        first: usize,
        second: usize,
        x: i64,
        y: i64,
    },

    #[error("sigma order is not a permutation of 0..{n}")]
    InvalidSigma { n: usize },

    #[error("minimum set size must be at least 3, got {0}")]
    InvalidMinSize(usize),

    #[error("worker count must be at least 1")]
    ZeroWorkers,

    #[error("consistency failure: collinear set {0:?} reported more than once")]
    DuplicateSet(Vec<usize>),

    #[error("oracle refuses n = {n} (cap is {cap})")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("malformed merge input: {0}")]
    MalformedPieces(String),
}

pub type Result<T> = std::result::Result<T, Error>;
