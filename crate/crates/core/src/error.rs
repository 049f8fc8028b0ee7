use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: a permutation that is not a bijection, an action table
    /// breaking an axiom, a subgroup that is not closed, and so on.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("not a cocycle: (dc)({g},{h},{k}) has component {component} = {value}")]
    NotCocycle {
        g: usize,
        h: usize,
        k: usize,
        component: usize,
        value: String,
    },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Arguments outside the domain of a partial function, e.g. a
    /// non-commuting pair handed to a 2-character.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal convention error: {0}")]
    Internal(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    ///
    /// 1 is reserved for failed checks, which are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotCocycle { .. } => 3,
            Error::ResourceCap(_) => 4,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
