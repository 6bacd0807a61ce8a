//! Embedding trees of maximal degree 3 into the integer lattice.
//!
//! The placement in [`wiring::wire`] sends every vertex of a tree to its own
//! lattice point and every edge to a straight lattice segment, no two of which
//! share a unit step. It touches at most `ceil(7n/3)` lattice points for an
//! `n`-vertex tree.
//!
//! ```
//! use lattice_wiring::{wire, validate_k_wiring, OrderedTree};
//!
//! let tree = OrderedTree::perfect_planted(4);
//! let w = wire(&tree);
//! assert_eq!(tree.len(), 32);
//! assert!(w.volume() <= (7 * 32u64).div_ceil(3));
//! assert!(validate_k_wiring(&w, 1).is_valid());
//! ```
//!
//! The [`analysis`] module studies how close trees get to that bound, and
//! [`oracle`] provides brute-force answers for tiny instances.

pub mod analysis;
pub mod error;
pub mod oracle;
pub mod svg;
pub mod tree;
pub mod wiring;

pub use error::{Error, Result};
pub use tree::{enumerate_trees, EdgePlan, NodeId, OrderedTree, Reduction, SubdivisionPlan};
pub use wiring::{validate_k_wiring, wire, GridBox, GridPoint, GridWiring};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/placement.md")]
    mod placement {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/spirals.md")]
    mod spirals {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
}
