use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex count mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("candidate relation is not contained in the host relation")]
    NotContained,

    #[error("candidate relation is not transitive")]
    NotTransitive,

    #[error("{what} is {actual}, which exceeds the enumeration budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        budget: usize,
        actual: usize,
    },

    /// A triangle of the underlying graph, reported with 1-based labels.
    #[error("underlying graph has a triangle on vertices {0}, {1}, {2}")]
    TriangleFound(usize, usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("assignment has {found} values but the formula has {expected} variables")]
    AssignmentLength { expected: usize, found: usize },

    #[error("assignment falsifies clause {0}")]
    Unsatisfied(usize),

    #[error("formula has no satisfying assignment")]
    Unsatisfiable,
}
