//! Operators on the square `[-1, 1]^2`, the unit simplex and the unit disk:
//! affine and Duffy specializations of the Bernstein-Stancu operator, the
//! quadrant operators in multinomial form and their piecewise gluing.

mod affine;
mod piecewise;
mod quadrant;
mod transformed;
mod trinomial;

pub use affine::{ball_stancu, simplex_bernstein, simplex_bernstein_duffy, square_bernstein};
pub use piecewise::{
    axis_continuity_check, piecewise_bernstein_type_disk, piecewise_stancu_disk, PiecewiseDiskOperator,
    PiecewiseKind,
};
pub use quadrant::{
    quadrant_bernstein_type, quadrant_nodes, quadrant_stancu, QuadrantForm, QuadrantNode,
    QuadrantOperator,
};
pub use transformed::{
    quadrant_bernstein_type_transformed, quadrant_transform, transformed_stancu, TransformPair,
    TransformedStancu,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::univariate::DOMAIN_TOL;

/// A quadrant of the closed unit disk. Each contains its bounding half-axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    B1,
    B2,
    B3,
    B4,
}

impl Quadrant {
    /// In dispatch priority order.
    pub const ALL: [Quadrant; 4] = [Quadrant::B1, Quadrant::B2, Quadrant::B3, Quadrant::B4];

    /// Whether the quadrant's `x` and `y` coordinates are non-positive.
    pub fn signs(&self) -> (bool, bool) {
        match self {
            Quadrant::B1 => (false, false),
            Quadrant::B2 => (true, false),
            Quadrant::B3 => (true, true),
            Quadrant::B4 => (false, true),
        }
    }

    /// Sign test only; disk membership is checked separately.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let (neg_x, neg_y) = self.signs();
        let ok = |v: f64, neg: bool| if neg { v <= DOMAIN_TOL } else { v >= -DOMAIN_TOL };
        ok(x, neg_x) && ok(y, neg_y)
    }

    /// The first quadrant in [`Quadrant::ALL`] order containing the point.
    pub fn dispatch(x: f64, y: f64) -> Quadrant {
        Quadrant::ALL
            .into_iter()
            .find(|q| q.contains(x, y))
            .expect("every point lies in some quadrant")
    }

    pub fn index(&self) -> usize {
        *self as usize
    }

    pub(crate) fn check(&self, x: f64, y: f64) -> Result<()> {
        DiskPoint::new(x, y)?;
        if self.contains(x, y) {
            Ok(())
        } else {
            Err(Error::outside(x, y, format!("quadrant {self}")))
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.index() + 1)
    }
}

impl FromStr for Quadrant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quadrant::ALL
            .into_iter()
            .find(|q| q.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Contract(format!("unknown quadrant `{s}`")))
    }
}

/// A point of the closed unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    pub x: f64,
    pub y: f64,
}

impl DiskPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && x * x + y * y <= 1.0 + DOMAIN_TOL {
            Ok(Self { x, y })
        } else {
            Err(Error::outside(x, y, "the unit disk"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_prefers_lower_quadrants_on_axes() {
        assert_eq!(Quadrant::dispatch(0.0, 0.0), Quadrant::B1);
        assert_eq!(Quadrant::dispatch(-0.5, 0.0), Quadrant::B2);
        assert_eq!(Quadrant::dispatch(0.0, -0.5), Quadrant::B3);
        assert_eq!(Quadrant::dispatch(0.5, -0.5), Quadrant::B4);
        assert_eq!(Quadrant::dispatch(0.5, 0.0), Quadrant::B1);
    }

    #[test]
    fn disk_membership() {
        assert!(DiskPoint::new(0.6, 0.8).is_ok());
        assert!(DiskPoint::new(0.6, 0.81).is_err());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
        assert!(Quadrant::B2.check(0.1, 0.1).is_err());
    }

    #[test]
    fn names() {
        for q in Quadrant::ALL {
            assert_eq!(q.to_string().parse::<Quadrant>().unwrap(), q);
        }
    }
}
