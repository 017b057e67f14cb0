use thiserror::Error;

/// Every failure mode of the library.
///
/// Domain errors carry no payload beyond a short description so they can be
/// rendered as stable JSON error objects by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("integer factorization exceeded the trial-division bound {bound}")]
    FactorizationBoundExceeded { bound: u64 },
    #[error("zero element has no class")]
    ZeroElement,
    #[error("element is not in a quadratic extension")]
    NotAnExtension,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("matrix does not have determinant 1")]
    NotSl2,
    #[error("zero matrix")]
    ZeroMatrix,

    #[error("cubic is zero")]
    ZeroCubic,
    #[error("cubic does not have a triple root")]
    NotTripleRoot,
    #[error("cubic does not have a double root")]
    NotDoubleRoot,
    #[error("cubic has vanishing discriminant")]
    NotGeneric,
    #[error("discriminant of the cubic is not a square in the field")]
    NotGenericSquare,
    #[error("discriminant of the cubic is a square in the field")]
    NotGenericNonSquare,
    #[error("q does not square to Q_n(P)")]
    QMismatch,
    #[error("cubic does not have the requested discriminant")]
    DiscriminantMismatch,

    #[error("cubic has nonzero discriminant")]
    GenericInput,
    #[error("cubic is irreducible")]
    Irreducible,
    #[error("cubic has a multiple root")]
    MultipleRoot,

    #[error("field too large for exhaustive enumeration (p = {p}, bound = {bound})")]
    FieldTooLarge { p: u64, bound: u64 },
    #[error("operation requires a prime field")]
    NotPrimeField,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::FactorizationBoundExceeded { .. } => "FactorizationBoundExceeded",
            Error::ZeroElement => "ZeroElement",
            Error::NotAnExtension => "NotAnExtension",
            Error::InvalidField(_) => "InvalidField",
            Error::Parse(_) => "Parse",
            Error::Unsupported(_) => "Unsupported",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotTraceless => "NotTraceless",
            Error::NotSl2 => "NotSl2",
            Error::ZeroMatrix => "ZeroMatrix",
            Error::ZeroCubic => "ZeroCubic",
            Error::NotTripleRoot => "NotTripleRoot",
            Error::NotDoubleRoot => "NotDoubleRoot",
            Error::NotGeneric => "NotGeneric",
            Error::NotGenericSquare => "NotGenericSquare",
            Error::NotGenericNonSquare => "NotGenericNonSquare",
            Error::QMismatch => "QMismatch",
            Error::DiscriminantMismatch => "DiscriminantMismatch",
            Error::GenericInput => "GenericInput",
            Error::Irreducible => "Irreducible",
            Error::MultipleRoot => "MultipleRoot",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::NotPrimeField => "NotPrimeField",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
