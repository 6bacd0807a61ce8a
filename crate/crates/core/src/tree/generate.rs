use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{OrderedTree, TreeBuilder};
use crate::error::{Error, Result};

pub(super) fn path(n: usize) -> Result<OrderedTree> {
    if n == 0 {
        return Err(Error::Argument("a path needs at least one vertex".into()));
    }
    let (mut b, root) = TreeBuilder::with_root();
    b.add_chain(root, n - 1);
    Ok(b.finish())
}

fn add_perfect(b: &mut TreeBuilder, at: usize, height: u32) {
    if height == 0 {
        return;
    }
    let left = b.add_child(at);
    add_perfect(b, left, height - 1);
    let right = b.add_child(at);
    add_perfect(b, right, height - 1);
}

pub(super) fn planted_perfect(n: u32) -> OrderedTree {
    let (mut b, root) = TreeBuilder::with_root();
    let top = b.add_child(root);
    add_perfect(&mut b, top, n);
    b.finish()
}

pub(super) fn spiral(n: u32) -> Result<OrderedTree> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "the spiral family starts at n = 2, got {n}"
        )));
    }
    let (mut b, root) = TreeBuilder::with_root();
    let top = b.add_child(root);
    // First subtree of the branch node: 2^n - 1 vertices as a path.
    let first = b.add_child(top);
    b.add_chain(first, (1usize << n) - 2);
    let second = b.add_child(top);
    // Its first subtree: 2^(n-1) - 1 vertices as a path.
    let inner = b.add_child(second);
    b.add_chain(inner, (1usize << (n - 1)) - 2);
    // The twice-rotated perfect subtree stays intact.
    let spiral = b.add_child(second);
    add_perfect(&mut b, spiral, n - 2);
    Ok(b.finish())
}

pub(super) fn random(n: usize, seed: u64) -> Result<OrderedTree> {
    if n == 0 {
        return Err(Error::Argument("a tree needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut b, root) = TreeBuilder::with_root();
    // One entry per free child slot.
    let mut slots = vec![root, root];
    for _ in 1..n {
        let owner = slots.swap_remove(rng.random_range(0..slots.len()));
        let v = b.add_child(owner);
        slots.push(v);
        slots.push(v);
    }
    Ok(b.finish())
}

/// Every ordered tree with exactly `n` vertices and at most two children per
/// node, in a fixed order. There are Motzkin(n - 1) of them.
pub fn enumerate_trees(n: usize) -> Vec<OrderedTree> {
    let mut shapes: Vec<Vec<String>> = vec![Vec::new(), vec!["()".to_string()]];
    for size in 2..=n {
        let mut here = Vec::new();
        for t in &shapes[size - 1] {
            here.push(format!("({t})"));
        }
        for left in 1..size - 1 {
            let right = size - 1 - left;
            for a in &shapes[left] {
                for b in &shapes[right] {
                    here.push(format!("({a}{b})"));
                }
            }
        }
        shapes.push(here);
    }
    if n == 0 {
        return Vec::new();
    }
    shapes[n]
        .iter()
        .map(|t| OrderedTree::parse(t).expect("generated text is well formed"))
        .collect()
}
