use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("interior block of the Kirchhoff matrix is singular (some interior vertex has no path to the boundary)")]
    SingularInterior,

    #[error("matrix is not nilpotent within {0} steps")]
    NotNilpotent(usize),

    #[error("matrix is not of the form cI + N with N nilpotent")]
    UnsupportedMatrix,

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("negative parameter {0}")]
    NegativeParameter(String),

    #[error("non-positive parameter {0}")]
    NonPositiveParameter(String),

    #[error("singular denominator: {0}")]
    SingularDenominator(String),

    #[error("matrix is not in the top cell: {0}")]
    NotInTopCell(String),

    #[error("residue after factorization is not the identity")]
    ResidueNotIdentity,

    #[error("permutation size {0} is even")]
    EvenSize(usize),

    #[error("unknown representation name {0:?}")]
    UnknownName(String),

    #[error("bracket closure exceeded the dimension budget {0}")]
    ClosureBudgetExceeded(usize),

    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
