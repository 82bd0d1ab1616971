use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{0}` is declared more than once")]
    DuplicateArgument(String),

    #[error("{}unknown argument `{label}`", line_prefix(*.line))]
    UnknownArgument { label: String, line: Option<usize> },

    #[error("invalid argument label `{0}`")]
    InvalidLabel(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("framework has no arguments")]
    EmptyFramework,

    #[error("block selection is empty")]
    EmptySelection,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("framework has {n} arguments, above the enumeration limit of {limit} (raise it with --limit)")]
    EnumerationLimitExceeded { n: usize, limit: usize },

    #[error("framework has {n} arguments, above the oracle limit of {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),
}

fn line_prefix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}
