use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(String, String, String),
    #[error("unit vector is not a two-sided identity")]
    NoUnit,
    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error("trace pairing is degenerate")]
    DegenerateTrace,
    #[error("Nakayama automorphism has no finite order up to {0}")]
    NakayamaInfiniteOrder(u32),
    #[error("Nakayama automorphism is not diagonalizable")]
    NakayamaNotDiagonalizable,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bad composition: {0}")]
    BadComposition(String),
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("element is not in the polynomial subalgebra")]
    NotPolynomial,
    #[error("bad automorphism parameters: {0}")]
    BadAutomorphismParams(String),
    #[error("zero element has no leading term")]
    ZeroElement,
    #[error("cyclotomic parameter is not fixed by the Nakayama automorphism: {0}")]
    NotPsiFixed(String),
    #[error("cyclotomic parameter has wrong degree: {0}")]
    WrongDegree(String),
    #[error("cyclotomic parameter is odd: {0}")]
    OddParity(String),
    #[error("cyclotomic level is zero")]
    LevelZero,
    #[error("elements use different cyclotomic parameters")]
    ParamsMismatch,
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("Gram matrix is degenerate")]
    DegenerateGram,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
