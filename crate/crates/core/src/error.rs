use thiserror::Error;

/// Errors raised at the construction boundary and by parameterised families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("invalid gap {0}: gaps must be positive integers")]
    InvalidGap(i64),
    #[error("invalid generator {0}: generators must be positive integers")]
    InvalidGenerator(i64),
    #[error("empty generator set")]
    EmptyGenerators,
    #[error("not a numerical semigroup: {x} + {y} = {} is listed as a gap", x + y)]
    NotASemigroup { x: u64, y: u64 },
    #[error("generators have gcd {gcd}; the generated monoid is not cofinite")]
    NotCofinite { gcd: u64 },
    #[error("conductor exceeds the cap of {cap}")]
    ConductorTooLarge { cap: u64 },
    #[error("the trivial semigroup has no Frobenius gap to adjoin")]
    TrivialSemigroup,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("genus {requested} exceeds the enumeration cap of {cap}")]
    GenusCapExceeded { requested: u32, cap: u32 },
    #[error("malformed gap list {line:?}: {reason}")]
    Parse { line: String, reason: String },
}

pub type Result<T> = std::result::Result<T, SemigroupError>;
