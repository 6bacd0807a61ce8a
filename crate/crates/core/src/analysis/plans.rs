use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};
use crate::tree::{Reduction, SubdivisionPlan};

/// Subdivision shares per leaf of a reduction, summing to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionalPlan {
    pub shares: Vec<Rational>,
}

impl ProportionalPlan {
    pub fn new(shares: Vec<Rational>) -> Self {
        Self { shares }
    }

    /// An integer plan on `r` with `total` subdivisions that follows the shares.
    ///
    /// Exact scaling is usually illegal: shares that tie at a sibling pair
    /// ignore the reduction's own vertices, which may sit on the right. So the
    /// minimal legal plan is laid down first, the rest is split by the shares
    /// rounded down, and the leftover units go one each to the leftmost leaves.
    pub fn realize(&self, r: &Reduction, total: u64) -> Result<SubdivisionPlan> {
        if self.shares.len() != r.leaf_count() {
            return Err(Error::Plan(format!(
                "{} shares for a reduction with {} leaves",
                self.shares.len(),
                r.leaf_count()
            )));
        }
        if self.shares.iter().any(Signed::is_negative)
            || self.shares.iter().sum::<Rational>() != Rational::one()
        {
            return Err(Error::Plan(
                "shares must be non-negative and sum to 1".into(),
            ));
        }
        let base = r.minimal_legal_plan();
        if total < base.total() {
            return Err(Error::NoLegalPlan {
                requested: total,
                minimum: base.total(),
            });
        }
        let spare = total - base.total();
        let scale = Rational::from_integer(BigInt::from(spare));
        let mut counts = base.counts;
        let mut placed = 0;
        for (c, s) in counts.iter_mut().zip(&self.shares) {
            let part = (s * &scale).floor().to_integer().to_u64().unwrap_or(0);
            *c += part;
            placed += part;
        }
        for c in counts.iter_mut().take((spare - placed) as usize) {
            *c += 1;
        }
        let plan = SubdivisionPlan::new(counts);
        r.check_ordering(&plan)?;
        Ok(plan)
    }

    /// Leaves with a positive share.
    pub fn support(&self) -> Vec<usize> {
        (0..self.shares.len())
            .filter(|&i| !self.shares[i].is_zero())
            .collect()
    }
}
