use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes: {0}")]
    DenominatorVanishes(String),
    #[error("series does not terminate at index {0}: no upper parameter equals -{0}")]
    NotTerminating(usize),
    #[error("degree {degree} exceeds capacity {cap}")]
    CapExceeded { degree: usize, cap: usize },
    #[error("polynomial of degree {degree} does not fit operator on degree <= {n}")]
    DegreeMismatch { degree: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("basis matrix is singular")]
    SingularBasis,
    #[error("non-generic parameters: {0} vanishes")]
    NonGenericParams(String),
    #[error(
        "operator {op} does not preserve degree <= {n}: image of x^{column} has degree {degree}"
    )]
    ClosureViolation {
        op: String,
        n: usize,
        column: usize,
        degree: usize,
    },
    #[error("{0} is not available for this parameter kind")]
    WrongKind(String),
    #[error("{0} is not a scalar multiple of the identity")]
    NotScalar(String),
    #[error("{0} does not commute with {1}")]
    NotCentral(String, String),
    #[error("{basis}-basis eigen relation fails at index {index}: residual {residual}")]
    EigenMismatch {
        basis: String,
        index: usize,
        residual: String,
    },
    #[error("{family}: coefficient ({row}, {col}) is {actual}, expected {expected}")]
    CoefficientMismatch {
        family: String,
        row: usize,
        col: usize,
        expected: String,
        actual: String,
    },
    #[error("{kind}: closed form and linear solve differ at ({row}, {col}): {closed} vs {solved}")]
    OracleMismatch {
        kind: String,
        row: usize,
        col: usize,
        closed: String,
        solved: String,
    },
    #[error("identity {name} fails: {lhs} != {rhs}")]
    IdentityFailure {
        name: String,
        lhs: String,
        rhs: String,
    },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
