use thiserror::Error;

/// Errors reported by ring constructors and checkers.
#[derive(Debug, Clone, Error)]
pub enum RingError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: requested {requested} elements, cap is {cap}")]
    SizeLimit { requested: usize, cap: usize },

    #[error("not a ring homomorphism: {identity} fails at {witness}")]
    NotAHomomorphism { identity: String, witness: String },

    #[error("conductor mismatch: preimages of the two ideals differ, witness {witness}")]
    ConductorMismatch { witness: String },

    #[error("mismatched parent rings: {0}")]
    MismatchedRings(String),

    #[error("quotient is not finite: {0}")]
    InfiniteRing(String),

    #[error("random generation failed: {0}")]
    GenerationFailure(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, RingError>;
