use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::Mesh;
use crate::disk::{DiskPoint, PiecewiseDiskOperator, PiecewiseKind};
use crate::error::{Error, Result};
use crate::stancu::{CurvilinearDomain, NodeSchedule, StancuOperator};

/// A disk operator family; the degree is supplied when it is prepared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorSpec {
    /// Piecewise quadrant Bernstein-type operator (`Cbar`).
    Cbar,
    /// Piecewise quadrant Bernstein-Stancu operator (`Bbar`).
    Bbar,
    /// Bernstein-Stancu operator on the whole disk (`Bstancu-disk`); the
    /// schedule defaults to `n_k = n`.
    BstancuDisk { schedule: Option<NodeSchedule> },
}

impl OperatorSpec {
    pub const STANCU_DISK: OperatorSpec = OperatorSpec::BstancuDisk { schedule: None };

    pub fn name(&self) -> &'static str {
        match self {
            OperatorSpec::Cbar => "Cbar",
            OperatorSpec::Bbar => "Bbar",
            OperatorSpec::BstancuDisk { .. } => "Bstancu-disk",
        }
    }

    /// Samples `f` at the operator's nodes for degree `n`.
    pub fn prepare(&self, f: impl Fn(f64, f64) -> f64, n: u32) -> Result<PreparedOperator> {
        if n == 0 {
            return Err(Error::Parameter {
                name: "n",
                value: 0,
                reason: "disk operators need n >= 1",
            });
        }
        Ok(match *self {
            OperatorSpec::Cbar => {
                PreparedOperator::Piecewise(PiecewiseDiskOperator::new(f, PiecewiseKind::BernsteinType, n))
            }
            OperatorSpec::Bbar => {
                PreparedOperator::Piecewise(PiecewiseDiskOperator::new(f, PiecewiseKind::Stancu, n))
            }
            OperatorSpec::BstancuDisk { schedule } => PreparedOperator::Stancu(StancuOperator::new(
                f,
                &CurvilinearDomain::disk(),
                n,
                schedule.unwrap_or(NodeSchedule::Constant(n)),
            )?),
        })
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::BstancuDisk {
                schedule: Some(s),
            } => write!(f, "{}[{s}]", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for OperatorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Cbar" => Ok(OperatorSpec::Cbar),
            "Bbar" => Ok(OperatorSpec::Bbar),
            "Bstancu-disk" => Ok(OperatorSpec::STANCU_DISK),
            _ => Err(Error::Contract(format!(
                "unknown operator `{s}` (expected Cbar, Bbar or Bstancu-disk)"
            ))),
        }
    }
}

/// A disk operator with its node values computed.
#[derive(Debug, Clone)]
pub enum PreparedOperator {
    Piecewise(PiecewiseDiskOperator),
    Stancu(StancuOperator),
}

impl PreparedOperator {
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        DiskPoint::new(x, y)?;
        match self {
            PreparedOperator::Piecewise(op) => op.eval(x, y),
            PreparedOperator::Stancu(op) => op.eval(x, y),
        }
    }
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::default();
        iter.into_iter().for_each(|v| s.add(v));
        s
    }
}

/// The pieces of an RMSE, so that either normalisation can be reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmseBreakdown {
    pub squared_error_sum: f64,
    /// Entries actually summed.
    pub points: usize,
    /// Nominal count of the mesh specification.
    pub nominal: usize,
}

impl RmseBreakdown {
    /// `sqrt(sum / nominal)`: the reported statistic.
    pub fn rmse(&self) -> f64 {
        (self.squared_error_sum / self.nominal as f64).sqrt()
    }

    /// `sqrt(sum / points)`.
    pub fn rmse_over_points(&self) -> f64 {
        (self.squared_error_sum / self.points as f64).sqrt()
    }
}

/// Squared errors of `op` against `f` over the mesh. Points are evaluated in
/// parallel; the sum runs in mesh order so the result does not depend on
/// the number of threads.
pub fn rmse_breakdown(
    f: impl Fn(f64, f64) -> f64 + Sync,
    op: &PreparedOperator,
    mesh: &Mesh,
) -> Result<RmseBreakdown> {
    let errors = mesh
        .points()
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let approx = op.eval(p.x, p.y).map_err(|e| Error::at_point(i, e))?;
            let d = f(p.x, p.y) - approx;
            Ok(d * d)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(RmseBreakdown {
        squared_error_sum: errors.into_iter().collect::<CompensatedSum>().value(),
        points: mesh.len(),
        nominal: mesh.spec().nominal_count(),
    })
}

/// RMSE of `op` at the mesh's degree, normalised by the nominal count.
pub fn rmse(f: impl Fn(f64, f64) -> f64 + Sync, op: &OperatorSpec, mesh: &Mesh) -> Result<f64> {
    let prepared = op.prepare(&f, mesh.n())?;
    Ok(rmse_breakdown(&f, &prepared, mesh)?.rmse())
}
