//! The spiral family: leaf positions, rotation counts, the proportional
//! subdivision plan, and its volume per vertex in two algebraic forms.

use num_traits::{One, Zero};

use super::{int, inv_pow2, rat, ProportionalPlan, Rational};
use crate::error::{Error, Result};

/// Number of ones in the binary expansion of `x`.
pub fn popcount(x: u64) -> u32 {
    x.count_ones()
}

/// Quarter turns undergone by spiral leaf `l`: one per one-bit of `l`, plus
/// the two turns the whole spiral gets on its way to the top.
pub fn leaf_rotations(l: u64) -> u32 {
    popcount(l) + 2
}

/// Upper bound on the volume added per subdivision of spiral leaf `l`.
pub fn leaf_cost_upper(l: u64) -> Rational {
    int(2 + u64::from(popcount(l) / 2))
}

/// Position of spiral leaf `l` among the leaves of the reduced spiral tree;
/// the two path leaves come first.
pub fn spiral_leaf_index(l: u64) -> usize {
    2 + l as usize
}

fn require_three(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Argument(format!("needs n >= 3, got {n}")));
    }
    Ok(())
}

/// `[0, p_1, ..., p_{n-2}]` with `p_j = 2^(n-2-j) + ... + 2^(n-3)`: leaf 0 and,
/// for each j, the leftmost leaf that is j right-turns deep.
pub fn spiral_leaf_positions(n: u32) -> Result<Vec<u64>> {
    require_three(n)?;
    let mut out = vec![0];
    for j in 1..=n - 2 {
        out.push((n - 2 - j..=n - 3).map(|i| 1u64 << i).sum());
    }
    Ok(out)
}

/// Subdivision shares over the leaves of the reduced spiral tree: 1/2 and 1/4
/// on the two paths, and the last quarter split over the spiral leaves as
/// 1/2 to leaf 0, `1/2^(j+1)` to `p_j` for `j < n-2`, and `1/2^(n-2)` to the
/// last leaf.
pub fn spiral_plan(n: u32) -> Result<ProportionalPlan> {
    let positions = spiral_leaf_positions(n)?;
    let spiral_leaves = 1usize << (n - 2);
    let mut shares = vec![Rational::zero(); 2 + spiral_leaves];
    shares[0] = rat(1, 2);
    shares[1] = rat(1, 4);
    let quarter = rat(1, 4);
    shares[spiral_leaf_index(0)] = &quarter * rat(1, 2);
    for (j, &p) in positions.iter().enumerate().skip(1) {
        let j = j as u32;
        let share = if j == n - 2 {
            inv_pow2(n - 2)
        } else {
            inv_pow2(j + 1)
        };
        shares[spiral_leaf_index(p)] = &quarter * share;
    }
    Ok(ProportionalPlan::new(shares))
}

/// The displayed summation for the spiral's volume per vertex:
/// `1 + (2 + floor((n-2)/2)) / 2^n + sum_{j=1}^{n-3} (2 + floor(j/2)) / 2^(j+3)`.
pub fn vsn_sum(n: u32) -> Result<Rational> {
    require_three(n)?;
    let mut total = Rational::one() + int(2 + u64::from((n - 2) / 2)) * inv_pow2(n);
    for j in 1..=n.saturating_sub(3) {
        total += int(2 + u64::from(j / 2)) * inv_pow2(j + 3);
    }
    Ok(total)
}

/// The printed closed form `4/3 - (2 + floor((n-1)/2) - floor(n/2)) / 2^n`.
///
/// This does not agree with [`vsn_sum`] (at n = 4 it gives 61/48 against
/// 21/16); both are kept and compared rather than reconciled.
pub fn vsn_closed_form(n: u32) -> Result<Rational> {
    require_three(n)?;
    let bracket = 2 + i64::from((n - 1) / 2) - i64::from(n / 2);
    Ok(rat(4, 3) - rat(bracket, 1) * inv_pow2(n))
}

/// The linear objective `sum s_i v_i` of the spiral plan, with `v = 1` on the
/// two paths and [`leaf_cost_upper`] on the spiral leaves.
pub fn spiral_lp_value(n: u32) -> Result<Rational> {
    let plan = spiral_plan(n)?;
    let mut value = &plan.shares[0] + &plan.shares[1];
    for l in 0..1u64 << (n - 2) {
        value += &plan.shares[spiral_leaf_index(l)] * leaf_cost_upper(l);
    }
    Ok(value)
}
