use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("modulus {n} exceeds the supported bound {bound}")]
    ModulusTooLarge { n: u32, bound: u32 },

    #[error("estimated candidate count {estimate} exceeds the enumeration bound {bound}; use sampled mode")]
    SearchSpaceTooLarge { estimate: u128, bound: u128 },

    #[error("{context} requires a nonempty set")]
    EmptySet { context: &'static str },

    #[error("set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },

    #[error("matrix is not a symplectomorphism: determinant {det} != 1 (mod {n})")]
    NotSymplectic { det: u32, n: u32 },

    #[error("expected a {expected} zero set, got {actual}")]
    WrongForm {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
