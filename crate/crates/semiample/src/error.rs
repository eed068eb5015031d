use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto exit codes:
/// usage/parse/config problems exit 2, capability limits exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("point does not satisfy the curve equation")]
    NotOnCurve,
    #[error("curve is singular (discriminant is zero)")]
    SingularCurve,
    #[error("capability limit: {0}")]
    Capability(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unsupported surface kind: {0}")]
    UnsupportedKind(String),
    #[error("divisor is not nef: {0}")]
    NotNef(String),
    #[error("degenerate pencil: {0}")]
    DegeneratePencil(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
