use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent user input.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("element index {index} out of range for universe of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("pair ({0}, {1}) out of range for universe of size {2}")]
    PairOutOfRange(usize, usize, usize),

    #[error("relations are defined over different universes")]
    UniverseMismatch,

    /// An operation was called on an argument that does not satisfy its
    /// precondition (e.g. a Pawlak operator on a non-equivalence).
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: requested {requested}, bound is {bound}")]
    Capacity { requested: usize, bound: usize },

    #[error("property row {row} takes {expected} set argument(s)")]
    Arity { row: u8, expected: usize },

    #[error("relation satisfies the class predicate; no witness exists")]
    NoWitness,
}
