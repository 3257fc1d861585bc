use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("precision mismatch: 2^{0} vs 2^{1}")]
    PrecisionMismatch(u32, u32),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("length cap exhausted: {0}")]
    CapExhausted(String),
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("zero module has no projective cover")]
    ZeroModule,
    #[error("isomorphism undecided: {0}")]
    Uncertified(String),
    #[error("hypothesis ({clause}) failed: {msg}")]
    Hypothesis { clause: char, msg: String },
    #[error("surjection check failed: {0}")]
    Surjection(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Json(_) => 2,
            Error::Unsupported(_) => 3,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
