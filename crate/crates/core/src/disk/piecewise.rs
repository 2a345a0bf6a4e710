use std::fmt;
use std::str::FromStr;

use super::quadrant::{QuadrantForm, QuadrantOperator};
use super::{DiskPoint, Quadrant};
use crate::error::{Error, Result};

/// Which family of quadrant operators is glued together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PiecewiseKind {
    /// Quadrant Bernstein-Stancu operators (`B-bar`).
    Stancu,
    /// Quadrant Bernstein-type operators (`C-bar`).
    BernsteinType,
}

impl PiecewiseKind {
    pub fn form(&self) -> QuadrantForm {
        match self {
            PiecewiseKind::Stancu => QuadrantForm::Stancu,
            PiecewiseKind::BernsteinType => QuadrantForm::BernsteinType,
        }
    }
}

impl fmt::Display for PiecewiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PiecewiseKind::Stancu => "Bbar",
            PiecewiseKind::BernsteinType => "Cbar",
        })
    }
}

impl FromStr for PiecewiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Bbar" => Ok(PiecewiseKind::Stancu),
            "Cbar" => Ok(PiecewiseKind::BernsteinType),
            _ => Err(Error::Contract(format!("unknown piecewise operator `{s}`"))),
        }
    }
}

/// Four quadrant operators sharing one degree, dispatched by the sign of
/// the point. Points on an axis go to the first containing quadrant in the
/// order B1, B2, B3, B4.
#[derive(Debug, Clone)]
pub struct PiecewiseDiskOperator {
    kind: PiecewiseKind,
    parts: [QuadrantOperator; 4],
}

impl PiecewiseDiskOperator {
    pub fn new(f: impl Fn(f64, f64) -> f64, kind: PiecewiseKind, n: u32) -> Self {
        let parts = Quadrant::ALL.map(|q| QuadrantOperator::new(&f, q, kind.form(), n));
        Self { kind, parts }
    }

    pub fn kind(&self) -> PiecewiseKind {
        self.kind
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        DiskPoint::new(x, y)?;
        Ok(self.part(Quadrant::dispatch(x, y)).eval_unchecked(x, y))
    }

    /// The value of one quadrant's polynomial at a point of that quadrant.
    pub fn eval_in(&self, q: Quadrant, x: f64, y: f64) -> Result<f64> {
        self.part(q).eval(x, y)
    }

    fn part(&self, q: Quadrant) -> &QuadrantOperator {
        &self.parts[q.index()]
    }
}

/// The piecewise disk operator glued from quadrant Bernstein-Stancu operators.
pub fn piecewise_stancu_disk(f: impl Fn(f64, f64) -> f64, n: u32, x: f64, y: f64) -> Result<f64> {
    DiskPoint::new(x, y)?;
    PiecewiseDiskOperator::new(f, PiecewiseKind::Stancu, n).eval(x, y)
}

/// The piecewise disk operator glued from quadrant Bernstein-type operators.
pub fn piecewise_bernstein_type_disk(
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    x: f64,
    y: f64,
) -> Result<f64> {
    DiskPoint::new(x, y)?;
    PiecewiseDiskOperator::new(f, PiecewiseKind::BernsteinType, n).eval(x, y)
}

/// Largest disagreement between the quadrant polynomials that share an axis
/// point, over `samples` evenly spaced points of each diameter. At the
/// origin all four quadrants are compared.
pub fn axis_continuity_check(
    which: PiecewiseKind,
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    samples: usize,
) -> Result<f64> {
    if samples == 0 {
        return Err(Error::Parameter {
            name: "samples",
            value: 0,
            reason: "at least one axis sample is needed",
        });
    }
    let op = PiecewiseDiskOperator::new(f, which, n);
    let spread = |pts: (f64, f64), qs: &[Quadrant]| -> Result<f64> {
        let vals = qs
            .iter()
            .map(|&q| op.eval_in(q, pts.0, pts.1))
            .collect::<Result<Vec<_>>>()?;
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        Ok(hi - lo)
    };
    let position = |i: usize| {
        if samples == 1 {
            0.0
        } else {
            -1.0 + 2.0 * i as f64 / (samples - 1) as f64
        }
    };
    use Quadrant::*;
    let mut worst = spread((0.0, 0.0), &Quadrant::ALL)?;
    for i in 0..samples {
        let s = position(i);
        let (on_x, on_y): (&[Quadrant], &[Quadrant]) = match s.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => (&[B1, B4], &[B1, B2]),
            Some(std::cmp::Ordering::Less) => (&[B2, B3], &[B3, B4]),
            _ => (&Quadrant::ALL, &Quadrant::ALL),
        };
        worst = worst.max(spread((s, 0.0), on_x)?).max(spread((0.0, s), on_y)?);
    }
    Ok(worst)
}
