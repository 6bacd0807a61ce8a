//! Series reduction and leaf subdivision.
//!
//! A [`Reduction`] is the shape that determines how the placement algorithm
//! lays a tree out: unary chains are spliced away, and each sibling pair is
//! put in placement order (larger subtree first). The root is kept when it has
//! a single child, so a tree rooted at a degree-1 vertex reduces to a "planted"
//! full binary tree. That top edge carries the last rotation's connector cost.

use super::{NodeId, OrderedTree, TreeBuilder};
use crate::error::{Error, Result};

/// Series-reduced ordered tree: every non-root node has 0 or 2 children; the
/// root may have 0, 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Reduction {
    tree: OrderedTree,
    leaves: Vec<NodeId>,
}

/// Subdivision counts per leaf edge of a reduction, indexed by leaf position
/// (left to right, starting at 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SubdivisionPlan {
    pub counts: Vec<u64>,
}

/// Subdivision counts on arbitrary edges, indexed by the child endpoint's
/// node id; the root's entry must be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgePlan {
    pub counts: Vec<u64>,
}

impl SubdivisionPlan {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn zeros(leaves: usize) -> Self {
        Self {
            counts: vec![0; leaves],
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// A copy with one more subdivision on `leaf`.
    pub fn bumped(&self, leaf: usize) -> Self {
        let mut next = self.clone();
        next.counts[leaf] += 1;
        next
    }

    /// Leaf positions with a positive count.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len())
            .filter(|&i| self.counts[i] > 0)
            .collect()
    }
}

impl OrderedTree {
    pub fn reduce(&self) -> Reduction {
        Reduction::of(self)
    }
}

impl Reduction {
    /// Splices out every non-root node with exactly one child and orders each
    /// surviving sibling pair larger-first (ties keep the input order).
    pub fn of(tree: &OrderedTree) -> Self {
        let sizes = tree.subtree_sizes();
        let (mut b, root) = TreeBuilder::with_root();
        let mut stack = vec![(tree.root(), root)];
        while let Some((v, image)) = stack.pop() {
            let (first, second) = tree.children_by_size(&sizes, v);
            for child in [first, second].into_iter().flatten() {
                let mut end = child;
                while let [only] = *tree.children(end) {
                    end = only;
                }
                let id = b.add_child(image);
                stack.push((end, id));
            }
        }
        Self::from_tree_unchecked(b.finish())
    }

    /// Accepts a tree that is already series-reduced. The stored child order
    /// is taken as the placement order.
    pub fn from_tree(tree: OrderedTree) -> Result<Self> {
        for v in tree.nodes().skip(1) {
            if tree.children(v).len() == 1 {
                return Err(Error::Structure(format!(
                    "node {v} has a single child, a reduction is series-reduced"
                )));
            }
        }
        Ok(Self::from_tree_unchecked(tree))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_tree(OrderedTree::parse(text)?)
    }

    fn from_tree_unchecked(tree: OrderedTree) -> Self {
        let leaves = tree.leaves();
        Self { tree, leaves }
    }

    pub fn tree(&self) -> &OrderedTree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leaves(&self) -> &[NodeId] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn to_text(&self) -> String {
        self.tree.to_text()
    }

    /// The largest number of two-child nodes on a root-to-leaf path.
    pub fn branching_depth(&self) -> usize {
        let t = &self.tree;
        let mut count = vec![0usize; t.len()];
        for v in t.nodes() {
            let own = usize::from(t.children(v).len() == 2);
            let above = t.parent(v).map_or(0, |p| count[p.0]);
            count[v.0] = above + own;
        }
        self.leaves.iter().map(|l| count[l.0]).max().unwrap_or(0)
    }

    /// Number of second-child links between leaf `leaf` and the root, i.e. how
    /// many quarter turns the leaf's segment undergoes in the layout.
    pub fn rotations(&self, leaf: usize) -> usize {
        let t = &self.tree;
        let mut v = self.leaves[leaf];
        let mut turns = 0;
        while let Some(p) = t.parent(v) {
            if t.children(p).len() == 2 && t.children(p)[1] == v {
                turns += 1;
            }
            v = p;
        }
        turns
    }

    fn leftmost_leaf(&self, mut v: NodeId) -> NodeId {
        while let Some(&first) = self.tree.children(v).first() {
            v = first;
        }
        v
    }

    fn leaf_position(&self, v: NodeId) -> usize {
        self.leaves.binary_search(&v).expect("node is a leaf")
    }

    /// Lifts a leaf plan to an edge plan (counts on the leaf edges).
    pub fn edge_plan(&self, plan: &SubdivisionPlan) -> Result<EdgePlan> {
        if plan.counts.len() != self.leaf_count() {
            return Err(Error::Plan(format!(
                "{} counts for a reduction with {} leaves",
                plan.counts.len(),
                self.leaf_count()
            )));
        }
        let mut counts = vec![0; self.len()];
        for (&leaf, &c) in self.leaves.iter().zip(&plan.counts) {
            counts[leaf.0] = c;
        }
        Ok(EdgePlan { counts })
    }

    fn check_edge_plan_shape(&self, plan: &EdgePlan) -> Result<()> {
        if plan.counts.len() != self.len() {
            return Err(Error::Plan(format!(
                "{} edge counts for a reduction with {} nodes",
                plan.counts.len(),
                self.len()
            )));
        }
        if plan.counts[0] != 0 {
            return Err(Error::Plan(
                "the root has no edge above it to subdivide".into(),
            ));
        }
        Ok(())
    }

    /// Vertex mass of every subtree of the subdivided tree: reduction nodes plus
    /// subdivisions on edges inside the subtree, including the edge above it.
    fn masses(&self, plan: &EdgePlan) -> Vec<u64> {
        let t = &self.tree;
        let mut mass: Vec<u64> = plan.counts.iter().map(|c| c + 1).collect();
        for v in t.nodes().rev() {
            if let Some(p) = t.parent(v) {
                mass[p.0] += mass[v.0];
            }
        }
        mass
    }

    /// Checks that at every two-child node the left subtree is at least as
    /// heavy as the right one once `plan` is applied.
    pub fn check_edge_ordering(&self, plan: &EdgePlan) -> Result<()> {
        self.check_edge_plan_shape(plan)?;
        let mass = self.masses(plan);
        for v in self.tree.nodes() {
            if let [a, b] = *self.tree.children(v) {
                if mass[a.0] < mass[b.0] {
                    return Err(Error::Ordering {
                        node: v,
                        left: mass[a.0],
                        right: mass[b.0],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_ordering(&self, plan: &SubdivisionPlan) -> Result<()> {
        self.check_edge_ordering(&self.edge_plan(plan)?)
    }

    pub fn is_legal(&self, plan: &SubdivisionPlan) -> bool {
        self.check_ordering(plan).is_ok()
    }

    /// The legal plan with the fewest subdivisions. Working bottom-up, any
    /// deficit of a left subtree is added to its leftmost leaf.
    pub fn minimal_legal_plan(&self) -> SubdivisionPlan {
        let t = &self.tree;
        let mut counts = vec![0u64; self.leaf_count()];
        let mut mass = vec![1u64; t.len()];
        for v in t.nodes().rev() {
            if let [a, b] = *t.children(v) {
                if mass[a.0] < mass[b.0] {
                    let deficit = mass[b.0] - mass[a.0];
                    counts[self.leaf_position(self.leftmost_leaf(a))] += deficit;
                    mass[a.0] += deficit;
                }
            }
            // Masses below `v` that are not on its children go stale here; only
            // the ancestors of `v` read from now on.
            mass[v.0] = 1 + t.children(v).iter().map(|c| mass[c.0]).sum::<u64>();
        }
        SubdivisionPlan { counts }
    }

    /// Subdivides each leaf edge `plan.counts[i]` times.
    ///
    /// Fails when the plan would reorder a sibling pair, since the result would
    /// then have a different reduction.
    pub fn subdivide(&self, plan: &SubdivisionPlan) -> Result<OrderedTree> {
        let edges = self.edge_plan(plan)?;
        if self.len() == 1 && edges.counts[0] > 0 {
            return Err(Error::Plan(
                "a single-vertex reduction has no leaf edge to subdivide".into(),
            ));
        }
        self.subdivide_edges(&edges)
    }

    /// Subdivides arbitrary edges; `plan.counts[v]` applies to the edge above `v`.
    pub fn subdivide_edges(&self, plan: &EdgePlan) -> Result<OrderedTree> {
        self.check_edge_ordering(plan)?;
        let t = &self.tree;
        let (mut b, root) = TreeBuilder::with_root();
        let mut image = vec![0usize; t.len()];
        image[0] = root;
        for v in t.nodes().skip(1) {
            let p = t.parent(v).expect("non-root");
            let above = b.add_chain(image[p.0], plan.counts[v.0] as usize);
            image[v.0] = b.add_child(above);
        }
        Ok(b.finish())
    }

    /// Moves every subdivision on a non-leaf edge down to the leftmost leaf
    /// below that edge. The total is unchanged and the result is legal whenever
    /// the input is.
    pub fn leaf_only_normalize(&self, plan: &EdgePlan) -> Result<SubdivisionPlan> {
        self.check_edge_plan_shape(plan)?;
        let mut counts = vec![0u64; self.leaf_count()];
        for v in self.tree.nodes() {
            let c = plan.counts[v.0];
            if c > 0 {
                counts[self.leaf_position(self.leftmost_leaf(v))] += c;
            }
        }
        Ok(SubdivisionPlan { counts })
    }
}
