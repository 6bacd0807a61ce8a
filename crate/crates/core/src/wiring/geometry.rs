use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A vertex of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const ORIGIN: GridPoint = GridPoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Quarter turn clockwise about the origin: `(x, y) -> (y, -x)`.
    pub fn rotate_cw(self) -> Self {
        Self::new(self.y, -self.x)
    }

    pub fn rotate_ccw(self) -> Self {
        Self::new(-self.y, self.x)
    }

    /// `turns` clockwise quarter turns (taken mod 4).
    pub fn rotate_cw_by(self, turns: u8) -> Self {
        match turns % 4 {
            0 => self,
            1 => Self::new(self.y, -self.x),
            2 => Self::new(-self.x, -self.y),
            _ => Self::new(-self.y, self.x),
        }
    }

    pub fn taxicab(self, other: Self) -> u64 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }

    /// Lattice points of the axis-parallel segment from `self` to `to`,
    /// both ends included. `None` if the two points are not on a common axis line.
    pub fn segment_to(self, to: Self) -> Option<Vec<GridPoint>> {
        if self.x != to.x && self.y != to.y {
            return None;
        }
        let steps = self.taxicab(to) as i64;
        let dx = (to.x - self.x).signum();
        let dy = (to.y - self.y).signum();
        Some(
            (0..=steps)
                .map(|i| Self::new(self.x + i * dx, self.y + i * dy))
                .collect(),
        )
    }
}

impl Add for GridPoint {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for GridPoint {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for GridPoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed axis-aligned box of lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridBox {
    pub min: GridPoint,
    pub max: GridPoint,
}

impl GridBox {
    pub fn point(p: GridPoint) -> Self {
        Self { min: p, max: p }
    }

    pub fn include(&mut self, p: GridPoint) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn union(mut self, other: GridBox) -> Self {
        self.include(other.min);
        self.include(other.max);
        self
    }

    pub fn translate(self, d: GridPoint) -> Self {
        Self {
            min: self.min + d,
            max: self.max + d,
        }
    }

    pub fn rotate_cw_by(self, turns: u8) -> Self {
        let mut b = Self::point(self.min.rotate_cw_by(turns));
        b.include(self.max.rotate_cw_by(turns));
        b
    }

    pub fn width(&self) -> u64 {
        self.max.x.abs_diff(self.min.x)
    }

    pub fn height(&self) -> u64 {
        self.max.y.abs_diff(self.min.y)
    }

    /// Number of lattice points in the box.
    pub fn area(&self) -> u64 {
        (self.width() + 1) * (self.height() + 1)
    }
}
