use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis element {id} does not belong to algebra `{algebra}`")]
    AlgebraMismatch { algebra: String, id: i64 },

    #[error("leg {leg} of the tensor product is not unital")]
    NonUnitalLeg { leg: usize },

    #[error("algebra `{0}` has no unit")]
    NotUnital(String),

    #[error("no local unit found: {0}")]
    NoLocalUnit(String),

    #[error("left and right actions are not compatible: {0}")]
    MultiplierCompatibility(String),

    #[error("coassociativity fails for {0}")]
    Coassociativity(String),

    #[error("no nonzero left integral exists")]
    NoIntegral,

    #[error("the space of left integrals has dimension {0}, expected 1")]
    IntegralNotUnique(usize),

    #[error("the integral is not faithful: Gram matrix has rank {rank} < {dim}")]
    NotFaithful { rank: usize, dim: usize },

    #[error("{0} is not an element of the algebra, only a multiplier")]
    NotAnElement(String),

    #[error("operation requires a finite-dimensional algebra")]
    InfiniteDimensional,

    #[error("linear map is not invertible: {0}")]
    Singular(String),

    #[error("derived data failed verification: {0}")]
    Inconsistent(String),

    #[error("decomposition does not reproduce the element: {0}")]
    BadDecomposition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid algebra file: {0}")]
    InvalidFile(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("scalar fields of order {0} and {1} cannot be mixed here")]
    FieldMismatch(u32, u32),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
