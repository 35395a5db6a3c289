use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),

    /// A word mentions a generator outside the ambient generator set or
    /// outside the domain of an assignment.
    #[error("generator `{generator}` is not in the {context}")]
    UnknownGenerator { generator: String, context: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown {kind} `{id}`; valid: {valid}")]
    UnknownId {
        kind: &'static str,
        id: String,
        valid: String,
    },

    #[error("section is a component of the curve (restriction vanishes identically)")]
    SectionIsComponent,

    #[error("coset enumeration exceeded the limit of {limit} cosets")]
    CosetOverflow { limit: usize },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
