use thiserror::Error;

/// Errors raised by word parsing and the normal-form algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid group parameters p={p}, q={q}: need 1 <= p < q")]
    InvalidParams { p: u64, q: u64 },

    #[error("expansion would exceed {limit} letters")]
    ExpansionLimit { limit: usize },

    #[error("word is not horocyclic (stable letters after Britton reduction: {stable_letters})")]
    NotHorocyclic { stable_letters: usize },

    #[error("word is not a hill")]
    NotAHill,

    #[error("word is not a valley")]
    NotAValley,

    #[error("word is not difficult (t-sequence must start with T and end with t)")]
    NotDifficult,

    #[error("operation requires p to divide q (p={p}, q={q})")]
    RequiresDivides { p: u64, q: u64 },

    #[error(
        "unsupported case: p={p} does not divide q={q} and the Britton core is difficult; \
         geodesics for difficult words are an open problem when p does not divide q"
    )]
    UnsupportedCase { p: u64, q: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("element is outside the enumerated ball of radius {radius}")]
    OutOfBall { radius: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
