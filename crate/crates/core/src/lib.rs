//! Maximal and maximum transitive sub-relations of a binary relation.
//!
//! * [`maximal`]: two `O(n² + nm)` algorithms that shrink a relation to a
//!   maximal transitive sub-relation, a maximality oracle, and greedy
//!   extension of a given transitive sub-relation.
//! * [`maximum`]: exact maximum transitive sub-relations by enumeration, the
//!   `m/4` approximation, and directed cuts.
//! * [`cnf`]: the max-ones CNF encoding of the maximum problem.
//! * [`extremal`]: seeded experiments on random orientations and balanced cuts.

pub mod bench;
mod bits;
pub mod cli;
pub mod cnf;
pub mod error;
pub mod extremal;
pub mod format;
pub mod generate;
pub mod maximal;
pub mod maximum;
pub mod relation;
pub mod report;

pub use error::{Error, Result};
pub use maximal::{Algorithm, MaximalTrace};
pub use maximum::{DicutResult, Side, VertexPartition};
pub use relation::{Arc, ArcList, Relation, UndirectedGraph};
