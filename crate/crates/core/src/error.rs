use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid Zeckendorf representation: {0}")]
    InvalidRepresentation(String),

    #[error("track signature mismatch: {left:?} vs {right:?}")]
    SignatureMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("unknown track `{0}`")]
    UnknownTrack(String),

    #[error("resource limit exceeded: {what} (cap {cap})")]
    ResourceLimit { what: String, cap: usize },

    #[error("parse error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("`{0}` is already defined")]
    NameConflict(String),

    #[error("non-linear term: {0}")]
    NonLinear(String),

    #[error("arity mismatch for `{name}`: expected {expected}, got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("formula has free variables: {0:?}")]
    FreeVariables(Vec<String>),

    #[error("unsupported numeration system `{0}`")]
    Numeration(String),

    #[error("semigroup closure exceeded {0} vectors; finiteness undetermined")]
    FinitenessUndetermined(usize),

    #[error("oracle: factor length {n} is beyond the stability bound {bound}")]
    Unstable { n: usize, bound: usize },

    #[error("stage `{stage}` failed: {source}")]
    Stage { stage: String, source: Box<Error> },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// The innermost error beneath any stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }
}

/// Attaches a stage name to errors.
pub trait StageContext<T> {
    fn stage(self, name: &str) -> Result<T>;
}

impl<T> StageContext<T> for Result<T> {
    fn stage(self, name: &str) -> Result<T> {
        self.map_err(|e| Error::Stage {
            stage: name.to_string(),
            source: Box::new(e),
        })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
