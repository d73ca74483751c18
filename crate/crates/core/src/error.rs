use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe mismatch: expected {expected} atoms, got {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid rough class: {0}")]
    InvalidClass(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("`{op}` is undefined on a subset (type-1 element) at {span}")]
    UndefinedOnType1 { op: &'static str, span: String },

    #[error("{op} is undefined: {reason}")]
    Undefined { op: &'static str, reason: String },

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("carrier too large: {size} elements exceeds cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },

    #[error("search too large: {candidates} candidates exceeds cap {cap}")]
    SearchTooLarge { candidates: u128, cap: u128 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("non-classical valuation of `{sentence}` in world `{world}`")]
    NonClassicalValuation { sentence: String, world: String },

    #[error("missing annotation: {0}")]
    MissingAnnotation(String),

    #[error("unknown sentence `{0}`")]
    UnknownSentence(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("model error: {0}")]
    Model(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
