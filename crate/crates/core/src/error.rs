use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a numerical semigroup: gcd of generators is {0}")]
    NotNumericalSemigroup(u64),

    #[error("invalid parameters (e={e}, m={m}, n={n}): {reason}")]
    InvalidParams {
        e: u32,
        m: u32,
        n: u32,
        reason: String,
    },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("quotient is not Artinian (no empty degree layer up to {0})")]
    NotArtinian(u32),

    #[error("not Cohen-Macaulay: {0}")]
    NotCohenMacaulay(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("engine disagreement: {0}")]
    EngineMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
