use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("malformed cycle: {0}")]
    MalformedCycle(String),

    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderCapExceeded { order: usize, max: usize },

    #[error("table is not a quasigroup")]
    NotAQuasigroup,

    #[error("table is not a loop")]
    NotALoop,

    #[error(
        "closure exceeded {order} members; generators are inconsistent with a loop of that order"
    )]
    ClosureOverflow { order: usize },

    #[error("permutation set is not sharply transitive: {0}")]
    NotSharplyTransitive(String),

    #[error("generated table violates the {0} law")]
    LawViolation(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::MalformedInput {
            line,
            message: message.into(),
        }
    }
}
