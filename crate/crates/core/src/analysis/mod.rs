//! Volume-per-vertex analysis of the placement.
//!
//! Everything here is exact: rationals are [`num_rational::BigRational`], and
//! the only approximations are the finite subdivision budgets used when a
//! supremum is estimated by actually wiring trees.

mod plans;
mod ratio;
mod recurrence;
mod report;
mod spiral;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

pub use plans::ProportionalPlan;
pub use ratio::{
    estimate_vr, marginal_volume, spiral_leaf_costs, wired_ratio, LeafCost, RatioEstimate, Strategy,
};
pub use recurrence::{recurrence_table, RecurrenceTable};
pub use report::{analysis_rows, render as render_report, rows_json, AnalysisRow, ReportFormat};
pub use spiral::{
    leaf_cost_upper, leaf_rotations, popcount, spiral_leaf_index, spiral_leaf_positions,
    spiral_lp_value, spiral_plan, vsn_closed_form, vsn_sum,
};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `1 / 2^k`.
pub fn inv_pow2(k: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1) << k as usize)
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_ratio(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion rounded half away from zero to `places` digits.
pub fn format_decimal(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !(whole.is_zero_int() && frac.is_zero_int()) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>places$}")
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

trait IsZeroInt {
    fn is_zero_int(&self) -> bool;
}

impl IsZeroInt for BigInt {
    fn is_zero_int(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}
