use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The hypotheses of the requested theorem or bound are not met.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// An input exceeds a configured size guard.
    #[error("refused: {0}")]
    Refused(String),

    /// A structural pattern and a direct computation disagree.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// A computed instance contradicts a theorem or lemma.
    #[error("theorem falsified: {0}")]
    TheoremFalsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn not_applicable(msg: impl Into<String>) -> Error {
    Error::NotApplicable(msg.into())
}
