use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("{0}")]
    Invalid(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("expected {expected} coordinates, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("inhomogeneous {what}: {detail}")]
    Inhomogeneous { what: String, detail: String },
    #[error("f{index} does not annihilate the module")]
    NotAnnihilated { index: usize },
    #[error("the ci generators do not form a regular sequence; supply an explicit complex with dg actions")]
    NotRegular,
    #[error("invalid dg structure: {0}")]
    InvalidDg(String),
    #[error("Betti tail is not yet quasi-polynomial at N = {n}; increase N")]
    IncreaseN { n: usize },
    #[error("{0} is undefined for modules of complexity 0")]
    Undefined(&'static str),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("duality routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error reflects a bug or failed cross-check rather than
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::RouteDisagreement(_) | Error::Internal(_))
    }
}
