#![allow(dead_code)]

use lattice_wiring::wiring::EdgePath;
use lattice_wiring::{enumerate_trees, GridPoint, GridWiring, NodeId, OrderedTree};

/// The placement written as plain recursion over whole sub-wirings, copying
/// and transforming each child image at every level.
pub fn naive_wire(t: &OrderedTree) -> GridWiring {
    let sizes = t.subtree_sizes();
    let mut w = build(t, &sizes, t.root());
    w.edges.sort_by_key(|e| e.to);
    w
}

fn build(t: &OrderedTree, sizes: &[usize], v: NodeId) -> GridWiring {
    let mut f = GridWiring::point(v, GridPoint::ORIGIN);
    let (first, second) = t.children_by_size(sizes, v);
    if let Some(a) = first {
        let g = build(t, sizes, a);
        let lift = g.conn() as i64 + 1;
        f.extend(g.translate(GridPoint::new(0, lift)));
        f.edges.push(EdgePath {
            from: v,
            to: a,
            path: (0..=lift).map(|y| GridPoint::new(0, y)).collect(),
        });
    }
    if let Some(b) = second {
        let g = build(t, sizes, b);
        let shift = g.conn() as i64 + 1;
        f.extend(g.rotate_cw().translate(GridPoint::new(shift, 0)));
        f.edges.push(EdgePath {
            from: v,
            to: b,
            path: (0..=shift).map(|x| GridPoint::new(x, 0)).collect(),
        });
    }
    f
}

/// Every ordered tree with at most `n` vertices.
pub fn small_corpus(n: usize) -> Vec<OrderedTree> {
    (1..=n).flat_map(enumerate_trees).collect()
}

pub fn cap(n: usize) -> u64 {
    (7 * n as u64).div_ceil(3)
}

/// Removes leaf `leaf` from `t`; the root cannot be removed.
pub fn without_leaf(t: &OrderedTree, leaf: NodeId) -> OrderedTree {
    let lists: Vec<Vec<usize>> = t
        .nodes()
        .map(|v| {
            t.children(v)
                .iter()
                .filter(|&&c| c != leaf)
                .map(|c| c.0)
                .collect()
        })
        .collect();
    let mut keep: Vec<Option<usize>> = vec![None; t.len()];
    for (next, v) in t.nodes().filter(|&v| v != leaf).enumerate() {
        keep[v.0] = Some(next);
    }
    let remapped: Vec<Vec<usize>> = t
        .nodes()
        .filter(|&v| v != leaf)
        .map(|v| lists[v.0].iter().map(|&c| keep[c].unwrap()).collect())
        .collect();
    OrderedTree::from_child_lists(&remapped, 0).unwrap()
}
