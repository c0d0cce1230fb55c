use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part at index {index} is {value}; parts must be positive")]
    NonPositivePart { index: usize, value: i64 },

    #[error("not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },

    #[error("{what} = {value} exceeds the supported bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: i64,
        bound: i64,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("weight ({0}, {1}) must satisfy w1 < 0 < w2")]
    InvalidLambdaSigns(i64, i64),

    #[error("weight ({0}, {1}) must have both coordinates negative")]
    InvalidUSigns(i64, i64),

    #[error("weight ({0}, {1}) must have both coordinates positive")]
    InvalidVSigns(i64, i64),

    #[error("weight ({0}, {1}) is not generic: {2}")]
    NonGenericWeight(i64, i64, String),

    #[error("degree k = {k} out of range 0..={max}")]
    DegreeOutOfRange { k: i64, max: i64 },

    #[error("relation is not a strict order: {0}")]
    NotAStrictOrder(String),

    #[error("weight ({w0}, {w1}, {w2}) has coordinate sum {sum}, expected 0")]
    NonZeroSum { w0: i64, w1: i64, w2: i64, sum: i64 },

    #[error("weight ({w0}, {w1}, {w2}) is not strictly increasing")]
    NotIncreasing { w0: i64, w1: i64, w2: i64 },

    #[error("point ({a1}, {a2}) has degree {} > d = {d}", a1 + a2)]
    DegreeOverflow { a1: i64, a2: i64, d: i64 },

    #[error("d = {d} is smaller than the number of points {n}")]
    DegreeTooSmall { d: i64, n: usize },

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("unknown fixed point {0:?}")]
    UnknownFixedPoint(String),

    #[error("duplicate fixed point {0:?}")]
    DuplicateFixedPoint(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("output error: {message}")]
    Output { kind: std::io::ErrorKind, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
