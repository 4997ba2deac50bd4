use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot refine level {from} down to level {to}")]
    LossyRefine { from: u32, to: u32 },

    #[error("sample count {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("expected {expected} samples for level {level}, got {got}")]
    LengthMismatch {
        level: u32,
        expected: usize,
        got: usize,
    },

    #[error("the zero vector cannot be normalized")]
    ZeroVector,

    #[error("coefficients are not normalized: sum of squares is {0}")]
    NotNormalized(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid number {text:?}")]
    Parse { text: String },

    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("digit {digit} out of range for alphabet of size {base}")]
    Digit { digit: usize, base: usize },

    #[error("word {0} would be covered twice")]
    DoubleCover(String),
}

pub type Result<T> = std::result::Result<T, Error>;
