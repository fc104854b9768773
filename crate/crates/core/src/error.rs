use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel, the algebra layer and the
/// fusion procedure.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,
    #[error("gcd of two zero polynomials")]
    ZeroGcd,
    #[error("division by zero scalar")]
    ZeroScalarDivision,
    #[error("pole at t=0")]
    PoleAtT0,
    #[error("evaluation pole at q0 = {0}")]
    EvaluationPole(String),
    #[error("specialization pole at q=1")]
    SpecializationPole,
    #[error("identically singular factor")]
    IdenticallySingularFactor,
    #[error("regularity violated: {0}")]
    RegularityViolated(String),
    #[error("mismatched algebra sizes: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("swap of {0} and {1} does not give a standard tableau")]
    NonStandardSwap(usize, usize),
    #[error("invalid fusion direction: {0}")]
    InvalidDirection(String),
    #[error("tableau index {index} out of range ({count} standard tableaux)")]
    TableauIndexOutOfRange { index: usize, count: usize },
    #[error("family of elements is linearly dependent")]
    DependentFamily,
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("mathematical invariant violated: {0}")]
    InvariantViolated(String),
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

pub type Result<T> = std::result::Result<T, Error>;
