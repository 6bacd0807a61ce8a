//! Lattice wirings of trees: the recursive placement, its elementary
//! transforms, volume counters, and the coarse-wiring validator.

mod engine;
mod geometry;
pub mod json;
mod validate;

use std::collections::{BTreeMap, HashSet};

use crate::tree::{NodeId, OrderedTree};

pub use engine::wire;
pub use geometry::{GridBox, GridPoint};
pub use validate::{
    check_half_plane, check_quadrants, validate_k_wiring, QuadrantViolation, ValidationReport,
    Violation,
};

/// The image of one tree edge: a lattice path from the image of `from` to the
/// image of `to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    pub from: NodeId,
    pub to: NodeId,
    pub path: Vec<GridPoint>,
}

/// A map of tree vertices to lattice points and tree edges to lattice paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GridWiring {
    pub vertices: BTreeMap<NodeId, GridPoint>,
    pub edges: Vec<EdgePath>,
}

impl GridWiring {
    /// The wiring of a single vertex `v` at `at`.
    pub fn point(v: NodeId, at: GridPoint) -> Self {
        Self {
            vertices: BTreeMap::from([(v, at)]),
            edges: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Every image point: vertex images followed by all path points. Points
    /// may repeat.
    pub fn points(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.vertices
            .values()
            .copied()
            .chain(self.edges.iter().flat_map(|e| e.path.iter().copied()))
    }

    /// `|min y|` over the whole image, vertex images and path points alike: the
    /// extra length needed to hang this wiring below a parent. 0 when empty.
    pub fn conn(&self) -> u64 {
        self.points()
            .map(|p| p.y)
            .min()
            .map_or(0, i64::unsigned_abs)
    }

    pub fn map_points(&self, f: impl Fn(GridPoint) -> GridPoint) -> Self {
        Self {
            vertices: self.vertices.iter().map(|(&v, &p)| (v, f(p))).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgePath {
                    from: e.from,
                    to: e.to,
                    path: e.path.iter().map(|&p| f(p)).collect(),
                })
                .collect(),
        }
    }

    /// Quarter turn clockwise about the origin.
    pub fn rotate_cw(&self) -> Self {
        self.map_points(GridPoint::rotate_cw)
    }

    pub fn translate(&self, d: GridPoint) -> Self {
        self.map_points(|p| p + d)
    }

    /// Number of distinct lattice points met by the image.
    pub fn volume(&self) -> u64 {
        self.points().collect::<HashSet<_>>().len() as u64
    }

    /// `1 + sum of taxicab lengths of the tree edges`, using vertex images only.
    /// Equals [`GridWiring::volume`] when the edge paths are geodesics that meet
    /// only at shared endpoints, as for the output of [`wire`].
    pub fn volume_by_formula(&self, tree: &OrderedTree) -> u64 {
        1 + tree
            .edges()
            .map(|(p, c)| self.vertices[&p].taxicab(self.vertices[&c]))
            .sum::<u64>()
    }

    pub fn bounding_box(&self) -> Option<GridBox> {
        let mut points = self.points();
        let first = points.next()?;
        Some(points.fold(GridBox::point(first), |mut b, p| {
            b.include(p);
            b
        }))
    }

    /// Merges `other` into `self`. Vertices present in both keep `other`'s image.
    pub fn extend(&mut self, other: GridWiring) {
        self.vertices.extend(other.vertices);
        self.edges.extend(other.edges);
    }
}
