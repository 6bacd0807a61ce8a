use num_bigint::BigInt;

use super::{leaf_cost_upper, spiral_leaf_index, spiral_plan, Rational};
use crate::error::{Error, Result};
use crate::oracle;
use crate::tree::{OrderedTree, Reduction, SubdivisionPlan};
use crate::wiring::wire;

/// Measured and bounded per-subdivision cost of one spiral leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafCost {
    /// Spiral leaf label `l`, counted from the left within the spiral.
    pub leaf_index: u64,
    pub rotations: u32,
    pub v_upper: Rational,
    /// `None` when the leaf can be neither grown nor shrunk legally.
    pub v_empirical: Option<Rational>,
}

/// Volume per vertex of one subdivided tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioEstimate {
    pub reduction: Reduction,
    pub total_subdivisions: u64,
    pub plan: SubdivisionPlan,
    pub volume: u64,
    pub vertices: u64,
    pub ratio: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every legal plan; fails past the given number of plans.
    Exhaustive { budget: u64 },
    /// One subdivision at a time, on the leaf that gains the most volume.
    Greedy,
}

fn wired_volume(r: &Reduction, plan: &SubdivisionPlan) -> Result<(OrderedTree, u64)> {
    let tree = r.subdivide(plan)?;
    let volume = wire(&tree).volume();
    Ok((tree, volume))
}

/// Wires `subdivide(r, plan)` and reports its volume per vertex.
pub fn wired_ratio(r: &Reduction, plan: &SubdivisionPlan) -> Result<RatioEstimate> {
    let (tree, volume) = wired_volume(r, plan)?;
    let vertices = tree.len() as u64;
    Ok(RatioEstimate {
        reduction: r.clone(),
        total_subdivisions: plan.total(),
        plan: plan.clone(),
        volume,
        vertices,
        ratio: Rational::new(BigInt::from(volume), BigInt::from(vertices)),
    })
}

/// Volume gained by one more subdivision of `leaf` on top of `base`.
pub fn marginal_volume(r: &Reduction, leaf: usize, base: &SubdivisionPlan) -> Result<Rational> {
    if leaf >= r.leaf_count() {
        return Err(Error::Argument(format!(
            "leaf {leaf} out of range, the reduction has {} leaves",
            r.leaf_count()
        )));
    }
    let (_, before) = wired_volume(r, base)?;
    let (_, after) = wired_volume(r, &base.bumped(leaf))?;
    Ok(Rational::from_integer(
        BigInt::from(after) - BigInt::from(before),
    ))
}

/// Best volume per vertex over legal plans with `n` subdivisions.
pub fn estimate_vr(r: &Reduction, n: u64, strategy: Strategy) -> Result<RatioEstimate> {
    match strategy {
        Strategy::Exhaustive { budget } => oracle::exhaustive_vr(r, n, budget),
        Strategy::Greedy => greedy(r, n),
    }
}

fn greedy(r: &Reduction, n: u64) -> Result<RatioEstimate> {
    let mut plan = r.minimal_legal_plan();
    if n < plan.total() {
        return Err(Error::NoLegalPlan {
            requested: n,
            minimum: plan.total(),
        });
    }
    while plan.total() < n {
        let mut best: Option<(u64, SubdivisionPlan)> = None;
        for leaf in 0..r.leaf_count() {
            let next = plan.bumped(leaf);
            if !r.is_legal(&next) {
                continue;
            }
            let (_, volume) = wired_volume(r, &next)?;
            if best.as_ref().is_none_or(|(v, _)| volume > *v) {
                best = Some((volume, next));
            }
        }
        // Bumping the leftmost leaf never breaks the ordering.
        plan = best.expect("a legal move exists").1;
    }
    wired_ratio(r, &plan)
}

/// Per-leaf costs of the spiral leaves of `reduce(S_n)`, measured at the
/// spiral plan realized with `total` subdivisions.
///
/// The measurement adds one subdivision when that stays legal and otherwise
/// removes one.
pub fn spiral_leaf_costs(n: u32, total: u64) -> Result<Vec<LeafCost>> {
    let r = OrderedTree::spiral(n)?.reduce();
    let base = spiral_plan(n)?.realize(&r, total)?;
    let mut out = Vec::new();
    for l in 0..1u64 << (n - 2) {
        let i = spiral_leaf_index(l);
        let up = base.bumped(i);
        let v_empirical = if r.is_legal(&up) {
            Some(marginal_volume(&r, i, &base)?)
        } else if base.counts[i] > 0 {
            let mut down = base.clone();
            down.counts[i] -= 1;
            match r.is_legal(&down) {
                true => Some(marginal_volume(&r, i, &down)?),
                false => None,
            }
        } else {
            None
        };
        out.push(LeafCost {
            leaf_index: l,
            rotations: r.rotations(i) as u32,
            v_upper: leaf_cost_upper(l),
            v_empirical,
        });
    }
    Ok(out)
}
