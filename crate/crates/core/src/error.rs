use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GentorError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid extension spec: {0}")]
    InvalidSpec(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("operation not supported by this backend: {0}")]
    Unsupported(String),
    #[error("element is not generalized torsion: {0}")]
    NotGeneralizedTorsion(String),
    #[error("abelianization is infinite")]
    InfiniteAbelianization,
    #[error("internal theorem violation: {0}")]
    TheoremViolation(String),
}

impl GentorError {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            GentorError::TheoremViolation(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = GentorError> = std::result::Result<T, E>;
