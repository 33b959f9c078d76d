use thiserror::Error;

/// Errors produced by the arithmetic, lattice and table layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("{what}: n = {n} exceeds the limit {limit}")]
    CostGuard {
        what: &'static str,
        n: u32,
        limit: u32,
    },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("action matrix does not satisfy action^{order} = I")]
    NotFiniteOrder { order: u32 },

    #[error("lattice basis rows are linearly dependent")]
    DependentBasis,

    #[error("vector is not in the lattice spanned by the basis")]
    NotInLattice,

    #[error("character value at basis index {index} is not a root of unity")]
    NotRootOfUnity { index: usize },

    #[error("character is not invariant under the cyclic shift")]
    NotCyclicInvariant,

    #[error("inconsistent configuration: {0}")]
    InconsistentConfig(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid input: {0}")]
    Invalid(String),

    /// An exact computation produced a value that cannot occur for valid
    /// input (for example a multiplicity that is not a nonnegative integer).
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, value: i64, expected: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        value,
        expected: expected.into(),
    }
}
