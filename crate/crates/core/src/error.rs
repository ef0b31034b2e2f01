use thiserror::Error;

/// Every failure the library can report.
///
/// Variants map one-to-one onto the documented failure modes of the public
/// operations so that callers (notably the CLI) can translate them into stable
/// exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the polynomial vanishes at the Möbius point a = {0}")]
    RootAtA(String),
    #[error("minor order {k} outside 1..={rank}")]
    KOutOfRange { k: usize, rank: usize },
    #[error("matrix does not have full column rank")]
    RankDeficient,
    #[error("operation undefined for the zero matrix")]
    ZeroMatrix,
    #[error("frame degree {frame} is below the matrix degree {degree}")]
    DegreeTooSmall { frame: i64, degree: i64 },
    #[error("column degrees do not match: {0}")]
    DegreeMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("malformed prescription: {0}")]
    MalformedPrescription(String),
    #[error("degree sums differ: {left} vs {right}")]
    SumMismatch { left: usize, right: usize },
    #[error("a square minimal basis must have all column degrees zero")]
    ImpossibleSquareCase,
    #[error("invariant data does not split into linear factors over the rationals: {0}")]
    FieldNotSplit(String),
    #[error("degree distribution is not majorized by the invariant factor degrees")]
    MajorizationFails,
    #[error("search budget of {0} nodes exhausted")]
    SearchExhausted(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("triangular completion search exhausted: {0}")]
    CompletionSearchExhausted(String),
    #[error("diagonal entry {0} is not monic of the required degree")]
    NonMonicDiagonal(usize),
    #[error("prescription is infeasible, failing {0}")]
    Infeasible(String),
    #[error("matrix is singular")]
    SingularInput,
    #[error("structural identity violated: {0}")]
    IdentityViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
