//! Coarse k-wiring checks and the geometric invariants of the placement.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use super::{GridBox, GridPoint, GridWiring};
use crate::tree::{NodeId, OrderedTree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// More than `k` tree vertices share a lattice point.
    VertexCollision {
        point: GridPoint,
        nodes: Vec<NodeId>,
    },
    /// A unit lattice edge lies on more than `k` edge paths (listed by index).
    EdgeOverload {
        a: GridPoint,
        b: GridPoint,
        paths: Vec<usize>,
    },
    /// An edge path names a vertex with no image.
    UnknownVertex {
        edge: usize,
        node: NodeId,
    },
    EmptyPath {
        edge: usize,
    },
    /// Consecutive points `step` and `step + 1` are not lattice neighbours.
    BrokenPath {
        edge: usize,
        step: usize,
    },
    /// The path does not start and end at the images of its edge's endpoints.
    EndpointMismatch {
        edge: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCollision { point, nodes } => {
                let ids: Vec<_> = nodes.iter().map(ToString::to_string).collect();
                write!(f, "vertices {} all map to {point}", ids.join(", "))
            }
            Violation::EdgeOverload { a, b, paths } => {
                write!(
                    f,
                    "lattice edge {a}-{b} is used by {} paths {paths:?}",
                    paths.len()
                )
            }
            Violation::UnknownVertex { edge, node } => {
                write!(f, "edge {edge} refers to vertex {node}, which has no image")
            }
            Violation::EmptyPath { edge } => write!(f, "edge {edge} has an empty path"),
            Violation::BrokenPath { edge, step } => {
                write!(
                    f,
                    "edge {edge} jumps between path points {step} and {}",
                    step + 1
                )
            }
            Violation::EndpointMismatch { edge } => {
                write!(f, "edge {edge} path does not join its endpoint images")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub requested_k: usize,
    /// Smallest k for which the vertex map is at most k-to-1.
    pub k_vertex: usize,
    /// Smallest k for which no lattice edge is on more than k paths.
    pub k_edge: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_structural_errors(&self) -> bool {
        self.violations.iter().any(|v| {
            !matches!(
                v,
                Violation::VertexCollision { .. } | Violation::EdgeOverload { .. }
            )
        })
    }
}

fn unit_edge(a: GridPoint, b: GridPoint) -> (GridPoint, GridPoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Checks both coarse k-wiring conditions and the shape of every edge path.
pub fn validate_k_wiring(w: &GridWiring, k: usize) -> ValidationReport {
    let mut violations = Vec::new();

    let mut at_point: BTreeMap<GridPoint, Vec<NodeId>> = BTreeMap::new();
    for (&v, &p) in &w.vertices {
        at_point.entry(p).or_default().push(v);
    }
    let k_vertex = at_point.values().map(Vec::len).max().unwrap_or(0);
    for (&point, nodes) in &at_point {
        if nodes.len() > k {
            violations.push(Violation::VertexCollision {
                point,
                nodes: nodes.clone(),
            });
        }
    }

    let mut usage: HashMap<(GridPoint, GridPoint), Vec<usize>> = HashMap::new();
    for (i, e) in w.edges.iter().enumerate() {
        for node in [e.from, e.to] {
            if !w.vertices.contains_key(&node) {
                violations.push(Violation::UnknownVertex { edge: i, node });
            }
        }
        let (Some(first), Some(last)) = (e.path.first(), e.path.last()) else {
            violations.push(Violation::EmptyPath { edge: i });
            continue;
        };
        if w.vertices.get(&e.from) != Some(first) || w.vertices.get(&e.to) != Some(last) {
            violations.push(Violation::EndpointMismatch { edge: i });
        }
        let mut seen = HashSet::new();
        for (step, pair) in e.path.windows(2).enumerate() {
            if pair[0].taxicab(pair[1]) != 1 {
                violations.push(Violation::BrokenPath { edge: i, step });
                continue;
            }
            let key = unit_edge(pair[0], pair[1]);
            if seen.insert(key) {
                usage.entry(key).or_default().push(i);
            }
        }
    }
    let k_edge = usage.values().map(Vec::len).max().unwrap_or(0).max(1);
    let mut overloads: Vec<_> = usage
        .into_iter()
        .filter(|(_, paths)| paths.len() > k)
        .map(|((a, b), paths)| Violation::EdgeOverload { a, b, paths })
        .collect();
    overloads.sort_by_key(|v| match v {
        Violation::EdgeOverload { a, b, .. } => (*a, *b),
        _ => unreachable!(),
    });
    violations.extend(overloads);

    ValidationReport {
        requested_k: k,
        k_vertex: k_vertex.max(usize::from(!w.vertices.is_empty())),
        k_edge,
        violations,
    }
}

/// A child subtree found outside the quadrant the placement reserves for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrantViolation {
    pub parent: NodeId,
    pub child: NodeId,
    pub second: bool,
    /// The child subtree's image box in the parent's frame.
    pub local_box: GridBox,
}

impl fmt::Display for QuadrantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (which, region) = if self.second {
            ("second", "x >= 1, y <= 0")
        } else {
            ("first", "x >= 0, y >= 1")
        };
        write!(
            f,
            "{which} child {} of {} spans {}..{} in its parent's frame, outside {{{region}}}",
            self.child, self.parent, self.local_box.min, self.local_box.max
        )
    }
}

/// Verifies, at every node of `tree`, that the first child's image lies in
/// `{x >= 0, y >= 1}` and the second child's in `{x >= 1, y <= 0}` of the
/// node's own frame. Frames are recovered from the materialised points: the
/// node's image is the origin and each second-child link adds a quarter turn.
pub fn check_quadrants(tree: &OrderedTree, w: &GridWiring) -> Result<(), QuadrantViolation> {
    let sizes = tree.subtree_sizes();
    let path_to: HashMap<NodeId, usize> =
        w.edges.iter().enumerate().map(|(i, e)| (e.to, i)).collect();

    let mut turns = vec![0u8; tree.len()];
    for v in tree.nodes() {
        if let (_, Some(second)) = tree.children_by_size(&sizes, v) {
            turns[second.0] = 1;
        }
    }
    for v in tree.nodes().skip(1) {
        let p = tree.parent(v).expect("non-root");
        turns[v.0] = (turns[v.0] + turns[p.0]) % 4;
    }

    // Image box of each subtree, excluding the connector above it.
    let mut inner: Vec<GridBox> = tree
        .nodes()
        .map(|v| GridBox::point(w.vertices[&v]))
        .collect();
    for v in tree.nodes().rev() {
        if let Some(p) = tree.parent(v) {
            let mut b = inner[v.0];
            for &q in &w.edges[path_to[&v]].path {
                b.include(q);
            }
            inner[p.0] = inner[p.0].union(b);
        }
    }

    for v in tree.nodes() {
        let (first, second) = tree.children_by_size(&sizes, v);
        let origin = w.vertices[&v];
        let undo = (4 - turns[v.0]) % 4;
        for (child, is_second) in [(first, false), (second, true)] {
            let Some(c) = child else { continue };
            let local = inner[c.0].translate(-origin).rotate_cw_by(undo);
            let inside = if is_second {
                local.min.x >= 1 && local.max.y <= 0
            } else {
                local.min.x >= 0 && local.min.y >= 1
            };
            if !inside {
                return Err(QuadrantViolation {
                    parent: v,
                    child: c,
                    second: is_second,
                    local_box: local,
                });
            }
        }
    }
    Ok(())
}

/// The placement's output never reaches left of the y-axis, and meets the
/// y-axis only at or above the origin. Returns the first offending point.
pub fn check_half_plane(w: &GridWiring) -> Result<(), GridPoint> {
    match w.points().find(|p| p.x < 0 || (p.x == 0 && p.y < 0)) {
        Some(p) => Err(p),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wiring::{wire, EdgePath};

    fn two_points(a: GridPoint, b: GridPoint) -> GridWiring {
        let mut w = GridWiring::point(NodeId(0), a);
        w.vertices.insert(NodeId(1), b);
        w
    }

    #[test]
    fn collisions_are_reported() {
        let w = two_points(GridPoint::ORIGIN, GridPoint::ORIGIN);
        let r = validate_k_wiring(&w, 1);
        assert_eq!(r.k_vertex, 2);
        assert_eq!(
            r.violations,
            vec![Violation::VertexCollision {
                point: GridPoint::ORIGIN,
                nodes: vec![NodeId(0), NodeId(1)]
            }]
        );
        assert!(validate_k_wiring(&w, 2).is_valid());
    }

    #[test]
    fn shared_lattice_edges_are_reported() {
        let up = GridPoint::new(0, 1);
        let mut w = two_points(GridPoint::ORIGIN, up);
        for _ in 0..2 {
            w.edges.push(EdgePath {
                from: NodeId(0),
                to: NodeId(1),
                path: vec![GridPoint::ORIGIN, up],
            });
        }
        let r = validate_k_wiring(&w, 1);
        assert_eq!(r.k_edge, 2);
        assert_eq!(r.k_vertex, 1);
        assert!(
            matches!(&r.violations[..], [Violation::EdgeOverload { paths, .. }] if paths == &[0, 1])
        );
    }

    #[test]
    fn structural_problems_are_reported() {
        let mut w = two_points(GridPoint::ORIGIN, GridPoint::new(2, 0));
        w.edges.push(EdgePath {
            from: NodeId(0),
            to: NodeId(1),
            path: vec![GridPoint::ORIGIN, GridPoint::new(2, 0)],
        });
        w.edges.push(EdgePath {
            from: NodeId(0),
            to: NodeId(1),
            path: vec![GridPoint::ORIGIN, GridPoint::new(1, 0)],
        });
        w.edges.push(EdgePath {
            from: NodeId(0),
            to: NodeId(7),
            path: vec![],
        });
        let r = validate_k_wiring(&w, 1);
        assert!(r.has_structural_errors());
        assert!(r
            .violations
            .contains(&Violation::BrokenPath { edge: 0, step: 0 }));
        assert!(r
            .violations
            .contains(&Violation::EndpointMismatch { edge: 1 }));
        assert!(r.violations.contains(&Violation::UnknownVertex {
            edge: 2,
            node: NodeId(7)
        }));
        assert!(r.violations.contains(&Violation::EmptyPath { edge: 2 }));
    }

    #[test]
    fn placement_output_satisfies_the_geometric_checks() {
        for text in ["()", "(())", "(()())", "((()())(()()))", "(((()())(()())))"] {
            let t = OrderedTree::parse(text).unwrap();
            let w = wire(&t);
            let r = validate_k_wiring(&w, 1);
            assert!(r.is_valid(), "{text}: {:?}", r.violations);
            assert_eq!((r.k_vertex, r.k_edge), (1, 1));
            check_quadrants(&t, &w).unwrap();
            check_half_plane(&w).unwrap();
        }
    }

    #[test]
    fn quadrant_check_catches_a_misplaced_child() {
        let t = OrderedTree::parse("(()())").unwrap();
        let mut w = wire(&t);
        // Swap the two leaves' positions (and their paths).
        w.vertices.insert(NodeId(1), GridPoint::new(1, 0));
        w.vertices.insert(NodeId(2), GridPoint::new(0, 1));
        w.edges[0].path = vec![GridPoint::ORIGIN, GridPoint::new(1, 0)];
        w.edges[1].path = vec![GridPoint::ORIGIN, GridPoint::new(0, 1)];
        let err = check_quadrants(&t, &w).unwrap_err();
        assert_eq!(
            (err.parent, err.child, err.second),
            (NodeId(0), NodeId(1), false)
        );
        assert!(check_half_plane(&w.translate(GridPoint::new(-1, 0))).is_err());
    }
}
