use thiserror::Error;

/// Every failure the algebra, calculus and verification layers can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("coordinate index {index} out of range for {vars} variables")]
    BadIndex { index: usize, vars: usize },
    #[error("rational function has a pole at the evaluation point")]
    EvaluationPole,
    #[error("signature mismatch: Cl({0},{1}) vs Cl({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("unsupported signature ({p},{q}): need p + q <= {max}")]
    BadSignature { p: usize, q: usize, max: usize },
    #[error("grade {grade} out of range for dimension {dim}")]
    BadGrade { grade: usize, dim: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("splitting vector must satisfy n^2 = +-1, got n^2 = {0}")]
    NotUnitNorm(String),
    #[error("alpha is not an involution for this splitter")]
    NotInvolutive,
    #[error("not a versor: {0}")]
    NotVersor(String),
    #[error("element is not alpha-even (parallel)")]
    NotParallel,
    #[error("splitting field must be a grade-1 field with n^2 = 1 exactly")]
    NotUnit,
    #[error("input must be homogeneous in grade")]
    NotHomogeneous,
    #[error("spinor field must lie in the even subalgebra")]
    NotEven,
    #[error("sigma must satisfy sigma^2 = -1 and [n, sigma] = 0")]
    BadSigma,
    #[error("frame is not adapted: {0}")]
    NotAdapted(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
