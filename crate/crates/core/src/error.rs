use thiserror::Error;

use crate::tree::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed tree text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A node in tree text (or a child list) with more than two children.
    #[error("node opened at byte {offset} has {count} children, at most 2 are allowed")]
    Degree { offset: usize, count: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("malformed tree: {0}")]
    Structure(String),

    /// The plan would make the right subtree heavier than the left one at `node`,
    /// so the placement algorithm would swap the children.
    #[error("size ordering violated at node {node}: left mass {left} < right mass {right}")]
    Ordering { node: NodeId, left: u64, right: u64 },

    #[error("subdivision plan: {0}")]
    Plan(String),

    #[error("no legal subdivision plan with {requested} subdivisions, the reduction needs at least {minimum}")]
    NoLegalPlan { requested: u64, minimum: u64 },

    #[error("search budget of {budget} exceeded ({hint})")]
    Budget { budget: u64, hint: &'static str },

    #[error("embedding: {0}")]
    Embedding(String),
}
