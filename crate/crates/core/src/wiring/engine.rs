//! The recursive placement.
//!
//! Root at the origin. The larger child's wiring is hung straight above the
//! root, just high enough to clear the x-axis; the smaller child's wiring is
//! turned a quarter clockwise and hung to the right, just far enough to clear
//! the y-axis. Each connector is a straight axis segment.
//!
//! Instead of copying child wirings at every level, this computes each
//! subtree's bounding box in its own frame bottom-up and then composes the
//! local frames top-down, so the cost is linear in the output size.

use std::collections::BTreeMap;

use super::{EdgePath, GridBox, GridPoint, GridWiring};
use crate::tree::OrderedTree;

/// Local frame of a subtree inside the root frame: `global = rotate(local) + offset`.
#[derive(Debug, Clone, Copy)]
struct Frame {
    turns: u8,
    offset: GridPoint,
}

impl Frame {
    fn apply(&self, p: GridPoint) -> GridPoint {
        p.rotate_cw_by(self.turns) + self.offset
    }
}

/// Where a child's frame origin sits in its parent's frame.
fn attachment(conn: u64, second: bool) -> GridPoint {
    let reach = conn as i64 + 1;
    if second {
        GridPoint::new(reach, 0)
    } else {
        GridPoint::new(0, reach)
    }
}

/// Runs the placement on `tree` and returns the assembled wiring.
pub fn wire(tree: &OrderedTree) -> GridWiring {
    let sizes = tree.subtree_sizes();
    let order: Vec<_> = tree
        .nodes()
        .map(|v| tree.children_by_size(&sizes, v))
        .collect();

    // Bounding box of each subtree's image in its own frame.
    let mut extent = vec![GridBox::point(GridPoint::ORIGIN); tree.len()];
    for v in tree.nodes().rev() {
        let (first, second) = order[v.0];
        let mut b = GridBox::point(GridPoint::ORIGIN);
        if let Some(w) = first {
            let shift = attachment(extent[w.0].min.y.unsigned_abs(), false);
            b = b.union(extent[w.0].translate(shift));
        }
        if let Some(w) = second {
            let shift = attachment(extent[w.0].min.y.unsigned_abs(), true);
            b = b.union(extent[w.0].rotate_cw_by(1).translate(shift));
        }
        extent[v.0] = b;
    }

    let mut frames = vec![
        Frame {
            turns: 0,
            offset: GridPoint::ORIGIN,
        };
        tree.len()
    ];
    let mut vertices = BTreeMap::new();
    let mut edges = Vec::with_capacity(tree.len().saturating_sub(1));
    for v in tree.nodes() {
        let frame = frames[v.0];
        vertices.insert(v, frame.offset);
        let (first, second) = order[v.0];
        for (w, is_second) in [(first, false), (second, true)] {
            let Some(w) = w else { continue };
            let local = attachment(extent[w.0].min.y.unsigned_abs(), is_second);
            let child = Frame {
                turns: (frame.turns + u8::from(is_second)) % 4,
                offset: frame.apply(local),
            };
            frames[w.0] = child;
            edges.push(EdgePath {
                from: v,
                to: w,
                path: frame
                    .offset
                    .segment_to(child.offset)
                    .expect("connectors are axis-parallel"),
            });
        }
    }
    // Present edges in the same order as `OrderedTree::edges`.
    edges.sort_by_key(|e| e.to);
    GridWiring { vertices, edges }
}
