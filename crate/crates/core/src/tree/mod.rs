//! Rooted ordered trees in which every node has at most two children.
//!
//! Such a tree is exactly a finite subtree of the 3-regular tree with a chosen
//! root: every non-root node has degree at most 3 and the root at most 2.
//! Nodes are always stored in preorder, so `NodeId(0)` is the root, a parent
//! precedes its children, and the leaves appear in left-to-right order.

mod generate;
mod parse;
mod reduce;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use generate::enumerate_trees;
pub use reduce::{EdgePlan, Reduction, SubdivisionPlan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    parent: Option<NodeId>,
    children: Vec<NodeId>,
}

/// A rooted tree with ordered children, at most two per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree {
    nodes: Vec<Node>,
}

impl OrderedTree {
    /// The one-vertex tree.
    pub fn singleton() -> Self {
        Self {
            nodes: vec![Node {
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    /// Builds a tree from per-node child lists and a root index, relabelling
    /// the nodes into preorder.
    ///
    /// Fails if a node has more than two children or the lists do not describe
    /// a single tree hanging from `root`.
    pub fn from_child_lists(children: &[Vec<usize>], root: usize) -> Result<Self> {
        let n = children.len();
        if root >= n {
            return Err(Error::Structure(format!(
                "root {root} out of range for {n} nodes"
            )));
        }
        let mut seen_as_child = vec![false; n];
        for (v, kids) in children.iter().enumerate() {
            if kids.len() > 2 {
                return Err(Error::Structure(format!(
                    "node {v} has {} children, at most 2 are allowed",
                    kids.len()
                )));
            }
            for &c in kids {
                if c >= n {
                    return Err(Error::Structure(format!("child {c} of {v} out of range")));
                }
                if c == root || seen_as_child[c] {
                    return Err(Error::Structure(format!("node {c} has two parents")));
                }
                seen_as_child[c] = true;
            }
        }

        // Preorder relabelling; also detects unreachable nodes (cycles).
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().rev().copied());
        }
        if order.len() != n {
            return Err(Error::Structure(format!(
                "{} of {n} nodes are not reachable from the root",
                n - order.len()
            )));
        }
        let mut new_id = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let mut nodes = vec![
            Node {
                parent: None,
                children: Vec::new()
            };
            n
        ];
        for &v in &order {
            let id = new_id[v];
            nodes[id].children = children[v].iter().map(|&c| NodeId(new_id[c])).collect();
            for &c in &children[v] {
                nodes[new_id[c]].parent = Some(NodeId(id));
            }
        }
        Ok(Self { nodes })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_tree(text)
    }

    /// Canonical text: nested parentheses, children in order, no whitespace.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        // (node, next child index)
        let mut stack = vec![(self.root(), 0usize)];
        out.push('(');
        while let Some((v, i)) = stack.last_mut() {
            let kids = &self.nodes[v.0].children;
            if *i < kids.len() {
                let c = kids[*i];
                *i += 1;
                out.push('(');
                stack.push((c, 0));
            } else {
                out.push(')');
                stack.pop();
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false: a tree has at least one node.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v.0].parent
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v.0].children
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v.0].children.is_empty()
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator {
        (0..self.nodes.len()).map(NodeId)
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<NodeId> {
        self.nodes().filter(|&v| self.is_leaf(v)).collect()
    }

    /// Edges as `(parent, child)`, ordered by child in preorder.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes()
            .filter_map(move |v| self.parent(v).map(|p| (p, v)))
    }

    pub fn max_child_count(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
    }

    /// Degree of `v` in the underlying undirected tree.
    pub fn degree(&self, v: NodeId) -> usize {
        self.children(v).len() + usize::from(self.parent(v).is_some())
    }

    /// `sizes[v]` is the number of vertices in the subtree rooted at `v`.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![1; self.len()];
        for v in self.nodes().rev() {
            if let Some(p) = self.parent(v) {
                sizes[p.0] += sizes[v.0];
            }
        }
        sizes
    }

    /// The children of `v` in placement order: the larger subtree first, ties
    /// keep the stored order.
    pub fn children_by_size(&self, sizes: &[usize], v: NodeId) -> (Option<NodeId>, Option<NodeId>) {
        match *self.children(v) {
            [] => (None, None),
            [a] => (Some(a), None),
            [a, b] if sizes[b.0] > sizes[a.0] => (Some(b), Some(a)),
            [a, b] => (Some(a), Some(b)),
            _ => unreachable!("at most two children"),
        }
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for v in self.nodes().skip(1) {
            let p = self.parent(v).expect("non-root has a parent");
            depth[v.0] = depth[p.0] + 1;
        }
        depth
    }

    /// Path on `n` vertices, rooted at one end.
    pub fn path(n: usize) -> Result<Self> {
        generate::path(n)
    }

    /// A perfect binary tree of height `n` with one extra vertex above its
    /// root; `2^(n+1)` vertices.
    pub fn perfect_planted(n: u32) -> Self {
        generate::planted_perfect(n)
    }

    /// The spiral family: the planted perfect tree of height `n` with the top
    /// branch node's first subtree and its second child's first subtree replaced
    /// by paths of the same sizes.
    pub fn spiral(n: u32) -> Result<Self> {
        generate::spiral(n)
    }

    /// A reproducible random tree on `n` vertices: each new vertex is attached
    /// at a free child slot chosen uniformly at random.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        generate::random(n, seed)
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Incremental construction helper; ids are insertion indices until `finish`
/// relabels into preorder.
#[derive(Debug, Default)]
pub(crate) struct TreeBuilder {
    children: Vec<Vec<usize>>,
}

impl TreeBuilder {
    pub(crate) fn with_root() -> (Self, usize) {
        (
            Self {
                children: vec![Vec::new()],
            },
            0,
        )
    }

    pub(crate) fn add_child(&mut self, parent: usize) -> usize {
        let id = self.children.len();
        self.children.push(Vec::new());
        self.children[parent].push(id);
        id
    }

    /// Hangs a chain of `len` vertices below `parent`, returning its far end.
    pub(crate) fn add_chain(&mut self, parent: usize, len: usize) -> usize {
        let mut at = parent;
        for _ in 0..len {
            at = self.add_child(at);
        }
        at
    }

    pub(crate) fn finish(self) -> OrderedTree {
        OrderedTree::from_child_lists(&self.children, 0).expect("builder produces trees")
    }
}
