use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library.
///
/// Every variant carries a stable machine-readable [`Error::code`] which the
/// command line front end emits in its JSON error objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("matrix is not 2-nilpotent (A^2 != 0)")]
    NotTwoNilpotent,

    #[error("matrix is not nilpotent (A^n != 0)")]
    NotNilpotent,

    #[error("matrix is not strictly upper triangular")]
    NotStrictlyUpperTriangular,

    #[error("matrix is not generic: corner minor of A^{power} vanishes at k = {k}")]
    NotGeneric { k: usize, power: usize },

    #[error("invalid oriented link pattern at vertex {vertex}: {reason}")]
    InvalidPattern { vertex: usize, reason: String },

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("invalid block composition: {0}")]
    InvalidBlocks(String),

    #[error("invalid indecomposable: {0}")]
    InvalidIndecomposable(String),

    #[error("invalid quiver representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid semiinvariant datum: {0}")]
    InvalidDatum(String),

    #[error("{what} = {value} exceeds the supported maximum {max}")]
    SizeGuard { what: &'static str, value: usize, max: usize },

    #[error("unsupported field size q = {0}")]
    UnsupportedField(u32),

    #[error("decomposition system is inconsistent: {0}")]
    InconsistentDecomposition(String),

    #[error("two orbits classified to the same pattern {0}")]
    ClassificationCollision(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotSquare { .. } => "not_square",
            Error::OutOfRange { .. } => "out_of_range",
            Error::NotTwoNilpotent => "not_2_nilpotent",
            Error::NotNilpotent => "not_nilpotent",
            Error::NotStrictlyUpperTriangular => "not_strictly_upper_triangular",
            Error::NotGeneric { .. } => "not_generic",
            Error::InvalidPattern { .. } => "invalid_pattern",
            Error::InvalidInvolution(_) => "invalid_involution",
            Error::InvalidBlocks(_) => "invalid_blocks",
            Error::InvalidIndecomposable(_) => "invalid_indecomposable",
            Error::InvalidRepresentation(_) => "invalid_representation",
            Error::InvalidDatum(_) => "invalid_datum",
            Error::SizeGuard { .. } => "size_guard",
            Error::UnsupportedField(_) => "unsupported_field",
            Error::InconsistentDecomposition(_) => "inconsistent_decomposition",
            Error::ClassificationCollision(_) => "classification_collision",
            Error::Parse(_) => "parse_error",
            Error::Io(_) => "io_error",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn mismatch(op: &'static str, detail: impl Into<String>) -> Self {
        Error::DimensionMismatch { op, detail: detail.into() }
    }
}
