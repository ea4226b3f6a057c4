use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {elem} does not belong to {group}")]
    InvalidElement { group: String, elem: String },

    #[error("group mismatch: expected {expected}, found {found}")]
    MismatchedGroup { expected: String, found: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("{ambient} has {order} elements; subgroup machinery supports at most 128")]
    GroupTooLarge { ambient: String, order: u64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural claim that should hold for all valid input failed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("conjugation orbit of size {found} where {expected} was expected")]
    FreenessViolation { expected: usize, found: usize },

    #[error("expected an integer, got {0}")]
    NonIntegral(String),

    #[error("no Sq1 value supplied for generator `{0}`")]
    MissingSq1Entry(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),
}
