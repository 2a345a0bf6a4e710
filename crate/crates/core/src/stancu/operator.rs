use std::sync::Arc;

use super::{CurvilinearDomain, NodeSchedule};
use crate::disk::TransformPair;
use crate::error::{Error, Result};
use crate::univariate::fill_row;

/// A bivariate field pulled back to `[0, 1]^2`:
/// `F(u, v) = f(x, (phi2(x) - phi1(x)) v + phi1(x))` with `x = (b - a) u + a`.
///
/// With a transform pair `T = (tau, sigma_x)` attached, the pull-back goes
/// through `T^-1` and the transformed curves `phi_i o tau^-1`.
#[derive(Clone)]
pub struct LiftedField {
    source: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    domain: CurvilinearDomain,
    transform: Option<TransformPair>,
}

/// Lifts `f` on `dom` to the unit square.
pub fn lift<F>(f: F, dom: &CurvilinearDomain) -> LiftedField
where
    F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
{
    LiftedField {
        source: Arc::new(f),
        domain: dom.clone(),
        transform: None,
    }
}

impl LiftedField {
    pub fn with_transform(mut self, pair: TransformPair) -> Self {
        self.transform = Some(pair);
        self
    }

    pub fn domain(&self) -> &CurvilinearDomain {
        &self.domain
    }

    pub fn eval(&self, u: f64, v: f64) -> f64 {
        let dom = &self.domain;
        let x = dom.x_interval().denormalize(u);
        match &self.transform {
            None => {
                let (x, lo, w) = dom.fibre(x);
                (self.source)(x, w * v + lo)
            }
            Some(pair) => {
                let x0 = pair.tau().inverse(x);
                let (_, lo, w) = dom.fibre(x0);
                let (xs, ys) = pair.inverse(x, w * v + lo);
                (self.source)(xs, ys)
            }
        }
    }
}

/// One column of the node mesh: the outer node `x_k` and its inner nodes
/// `y_{k,0} = phi1(x_k), ..., y_{k,n_k} = phi2(x_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeColumn {
    pub k: u32,
    pub x: f64,
    pub n_k: u32,
    pub ys: Vec<f64>,
}

/// The node set of a Bernstein-Stancu operator.
#[derive(Debug, Clone, PartialEq)]
pub struct StancuNodes {
    n: u32,
    schedule: NodeSchedule,
    columns: Vec<NodeColumn>,
    substituted: Vec<u32>,
}

impl StancuNodes {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn schedule(&self) -> NodeSchedule {
        self.schedule
    }

    pub fn columns(&self) -> &[NodeColumn] {
        &self.columns
    }

    /// Outer indices whose rule gave `n_k = 0` and which were given one
    /// inner interval instead.
    pub fn substituted(&self) -> &[u32] {
        &self.substituted
    }

    /// Node count with multiplicity, `sum_k (n_k + 1)`.
    pub fn len(&self) -> usize {
        self.columns.iter().map(|c| c.ys.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `(k, j, x, y)` in column-major order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, f64, f64)> + '_ {
        self.columns
            .iter()
            .flat_map(|c| c.ys.iter().enumerate().map(move |(j, &y)| (c.k, j as u32, c.x, y)))
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "bivariate operators need n >= 1",
        });
    }
    Ok(())
}

/// Builds the node mesh of the degree-`n` operator on `dom`.
pub fn stancu_nodes(dom: &CurvilinearDomain, n: u32, sched: NodeSchedule) -> Result<StancuNodes> {
    check_degree(n)?;
    sched.validate()?;
    let xs = dom.x_interval();
    let mut substituted = Vec::new();
    let columns = (0..=n)
        .map(|k| {
            let (n_k, swapped) = sched.effective(n, k);
            if swapped {
                substituted.push(k);
            }
            let x = xs.node(n, k);
            let (lo, hi) = (dom.phi1(x), dom.phi2(x));
            let w = hi - lo;
            let ys = (0..=n_k)
                .map(|j| {
                    if j == n_k {
                        hi
                    } else {
                        w * f64::from(j) / f64::from(n_k) + lo
                    }
                })
                .collect();
            NodeColumn { k, x, n_k, ys }
        })
        .collect();
    if !substituted.is_empty() {
        log::warn!(
            "schedule {sched} gives n_k = 0 at k = {substituted:?} (n = {n}); using n_k = 1 there"
        );
    }
    Ok(StancuNodes {
        n,
        schedule: sched,
        columns,
        substituted,
    })
}

/// A Bernstein-Stancu operator with the field already sampled at its nodes,
/// so that repeated evaluation costs `O(sum_k n_k)` per point.
#[derive(Debug, Clone)]
pub struct StancuOperator {
    domain: CurvilinearDomain,
    n: u32,
    degrees: Vec<u32>,
    values: Vec<Vec<f64>>,
}

impl StancuOperator {
    pub fn new(
        f: impl Fn(f64, f64) -> f64,
        dom: &CurvilinearDomain,
        n: u32,
        sched: NodeSchedule,
    ) -> Result<Self> {
        let nodes = stancu_nodes(dom, n, sched)?;
        let (degrees, values) = nodes
            .columns
            .iter()
            .map(|c| (c.n_k, c.ys.iter().map(|&y| f(c.x, y)).collect()))
            .unzip();
        Ok(Self {
            domain: dom.clone(),
            n,
            degrees,
            values,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn domain(&self) -> &CurvilinearDomain {
        &self.domain
    }

    /// Normalized coordinates `(u, t)` of a point of the domain; `t = 0`
    /// where the fibre is a single point.
    pub(crate) fn local(&self, x: f64, y: f64) -> (f64, f64) {
        let (x, lo, w) = self.domain.fibre(x);
        let u = self.domain.x_interval().normalize(x).clamp(0.0, 1.0);
        let t = if w > 0.0 {
            ((y - lo) / w).clamp(0.0, 1.0)
        } else {
            0.0
        };
        (u, t)
    }

    /// The inner Bernstein sum of column `k` at `t`.
    pub(crate) fn inner(&self, k: usize, t: f64) -> f64 {
        let mut row = Vec::new();
        fill_row(self.degrees[k], t, &mut row);
        dot(&self.values[k], &row)
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        self.domain.check(x, y)?;
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: f64, y: f64) -> f64 {
        let (u, t) = self.local(x, y);
        let mut outer = Vec::new();
        fill_row(self.n, u, &mut outer);
        let mut row = Vec::new();
        let mut row_degree = None;
        let mut acc = 0.0;
        for (k, &w) in outer.iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            let d = self.degrees[k];
            if row_degree != Some(d) {
                fill_row(d, t, &mut row);
                row_degree = Some(d);
            }
            acc += w * dot(&self.values[k], &row);
        }
        acc
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The degree-`n` Bernstein-Stancu operator of `f` on `dom`, at `(x, y)`.
pub fn stancu(
    f: impl Fn(f64, f64) -> f64,
    dom: &CurvilinearDomain,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    dom.check(x, y)?;
    StancuOperator::new(f, dom, n, sched)?.eval(x, y)
}
