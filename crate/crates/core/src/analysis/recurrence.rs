use num_traits::One;

use super::{rat, vsn_sum, Rational};
use crate::error::{Error, Result};

/// Upper-bound and refined sequences for the planted perfect trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTable {
    /// `V(n) = 7/12 + V(n-1)/2 + V(n-2)/4` from `V(0) = V(1) = 1`.
    pub values: Vec<Rational>,
    /// `(R(n-1) - 1)/2 + (R(n-2) - 1)/4 + S(n)`, where `S(n)` is the spiral's
    /// volume per vertex: [`vsn_sum`] for n >= 3 and 5/4 for n = 2.
    pub refined: Vec<Rational>,
}

impl RecurrenceTable {
    pub fn limit() -> Rational {
        rat(7, 3)
    }

    pub fn is_monotone(seq: &[Rational]) -> bool {
        seq.windows(2).all(|w| w[0] <= w[1])
    }
}

fn spiral_value(n: usize) -> Result<Rational> {
    match n {
        2 => Ok(rat(5, 4)),
        _ => vsn_sum(n as u32),
    }
}

pub fn recurrence_table(n_max: usize) -> Result<RecurrenceTable> {
    if n_max < 1 {
        return Err(Error::Argument("n_max must be at least 1".into()));
    }
    let one = Rational::one();
    let mut values = vec![one.clone(), one.clone()];
    let mut refined = values.clone();
    for n in 2..=n_max {
        let v = rat(7, 12) + &values[n - 1] * rat(1, 2) + &values[n - 2] * rat(1, 4);
        values.push(v);
        let r = (&refined[n - 1] - &one) * rat(1, 2)
            + (&refined[n - 2] - &one) * rat(1, 4)
            + spiral_value(n)?;
        refined.push(r);
    }
    Ok(RecurrenceTable { values, refined })
}
