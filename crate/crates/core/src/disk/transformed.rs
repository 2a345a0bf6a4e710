use std::sync::Arc;

use super::Quadrant;
use crate::error::{Error, Result};
use crate::stancu::{CurvilinearDomain, NodeSchedule, StancuOperator};
use crate::univariate::{validate_transform, Interval, Transform1D};

type Fibrewise = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Number of fibres on which `sigma_x` is sampled during validation.
const SIGMA_FIBRES: usize = 65;
const SIGMA_GRID: usize = 64;

/// A change of variables `T(x, y) = (tau(x), sigma_x(y))`, where `tau` fixes
/// `[a, b]` and each `sigma_x` fixes `[phi1(x), phi2(x)]`.
#[derive(Clone)]
pub struct TransformPair {
    tau: Transform1D,
    sigma: Fibrewise,
    sigma_inv: Fibrewise,
}

impl TransformPair {
    /// `sigma(x, y)` is `sigma_x(y)` and `sigma_inv(x, v)` its inverse in `v`.
    pub fn new<S, R>(tau: Transform1D, sigma: S, sigma_inv: R) -> Self
    where
        S: Fn(f64, f64) -> f64 + Send + Sync + 'static,
        R: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            tau,
            sigma: Arc::new(sigma),
            sigma_inv: Arc::new(sigma_inv),
        }
    }

    pub fn tau(&self) -> &Transform1D {
        &self.tau
    }

    pub fn forward(&self, x: f64, y: f64) -> (f64, f64) {
        (self.tau.forward(x), (self.sigma)(x, y))
    }

    /// `T^-1(X, Y) = (tau^-1(X), sigma_{tau^-1(X)}^-1(Y))`.
    pub fn inverse(&self, x: f64, y: f64) -> (f64, f64) {
        let x0 = self.tau.inverse(x);
        (x0, (self.sigma_inv)(x0, y))
    }

    /// `sigma_x` as a one-dimensional transform on the fibre at `x`, or
    /// `None` where the fibre is a single point.
    pub fn sigma_at(&self, x: f64, dom: &CurvilinearDomain) -> Option<Transform1D> {
        let iv = Interval::new(dom.phi1(x), dom.phi2(x)).ok()?;
        let (s, r) = (self.sigma.clone(), self.sigma_inv.clone());
        Some(Transform1D::new(move |y| s(x, y), move |v| r(x, v), iv))
    }

    /// Checks `tau` on `[a, b]` and `sigma_x` on a sample of fibres.
    pub fn validate(&self, dom: &CurvilinearDomain) -> Result<()> {
        self.tau.ensure_valid_on(&dom.x_interval())?;
        let xs = dom.x_interval();
        for i in 0..SIGMA_FIBRES {
            let x = xs.denormalize(i as f64 / (SIGMA_FIBRES - 1) as f64);
            let Some(sigma) = self.sigma_at(x, dom) else {
                continue;
            };
            let diag = validate_transform(&sigma, &sigma.domain(), SIGMA_GRID)?;
            if !diag.passed() {
                return Err(Error::Transform(format!("sigma at x = {x}: {diag}")));
            }
        }
        Ok(())
    }
}

/// The shifted Bernstein-type operator under a transform pair: the
/// Bernstein-Stancu operator of `f o T^-1` on the transformed domain
/// `(a, b, phi1 o tau^-1, phi2 o tau^-1)`, evaluated at `T(x, y)`.
#[derive(Clone)]
pub struct TransformedStancu {
    domain: CurvilinearDomain,
    pair: TransformPair,
    inner: StancuOperator,
}

impl TransformedStancu {
    pub fn new(
        f: impl Fn(f64, f64) -> f64,
        dom: &CurvilinearDomain,
        pair: &TransformPair,
        n: u32,
        sched: NodeSchedule,
    ) -> Result<Self> {
        pair.validate(dom)?;
        let (d1, t1) = (dom.clone(), pair.tau.clone());
        let (d2, t2) = (dom.clone(), pair.tau.clone());
        let image = CurvilinearDomain::new(
            dom.a(),
            dom.b(),
            move |x| d1.phi1(t1.inverse(x)),
            move |x| d2.phi2(t2.inverse(x)),
        )?;
        let inner = StancuOperator::new(
            |x, y| {
                let (u, v) = pair.inverse(x, y);
                f(u, v)
            },
            &image,
            n,
            sched,
        )?;
        Ok(Self {
            domain: dom.clone(),
            pair: pair.clone(),
            inner,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        self.domain.check(x, y)?;
        let (u, v) = self.pair.forward(x, y);
        Ok(self.inner.eval_unchecked(u, v))
    }
}

/// One-shot form of [`TransformedStancu`].
pub fn transformed_stancu(
    f: impl Fn(f64, f64) -> f64,
    dom: &CurvilinearDomain,
    pair: &TransformPair,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    dom.check(x, y)?;
    TransformedStancu::new(f, dom, pair, n, sched)?.eval(x, y)
}

fn chord(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).max(0.0).sqrt()
}

/// `y^2 / h` on the fibre of half-length `h`, or its reflection; a point
/// fibre maps to 0.
fn fold(sign: f64) -> (impl Fn(f64, f64) -> f64, impl Fn(f64, f64) -> f64) {
    let forward = move |x: f64, y: f64| {
        let h = chord(x);
        if h > 0.0 {
            sign * y * y / h
        } else {
            0.0
        }
    };
    let inverse = move |x: f64, v: f64| sign * (sign * v * chord(x)).max(0.0).sqrt();
    (forward, inverse)
}

/// The quadrant as a curvilinear domain, its transform pair and schedule,
/// so that [`transformed_stancu`] reproduces the closed forms of
/// [`super::quadrant_bernstein_type`].
pub fn quadrant_transform(q: Quadrant) -> (CurvilinearDomain, TransformPair, NodeSchedule) {
    let (neg_x, neg_y) = q.signs();
    let (a, b) = if neg_x { (-1.0, 0.0) } else { (0.0, 1.0) };
    let dom = if neg_y {
        CurvilinearDomain::new(a, b, |x| -chord(x), |_| 0.0)
    } else {
        CurvilinearDomain::new(a, b, |_| 0.0, chord)
    }
    .expect("quadrant domains are valid");
    let iv = dom.x_interval();
    let tau = if neg_x {
        Transform1D::new(|x| -x * x, |v: f64| -(-v).max(0.0).sqrt(), iv)
    } else {
        Transform1D::new(|x| x * x, |v: f64| v.max(0.0).sqrt(), iv)
    };
    let (sigma, sigma_inv) = fold(if neg_y { -1.0 } else { 1.0 });
    let sched = if neg_x {
        NodeSchedule::K
    } else {
        NodeSchedule::NMinusK
    };
    (dom, TransformPair::new(tau, sigma, sigma_inv), sched)
}

/// [`super::quadrant_bernstein_type`] computed through the general
/// transformed operator rather than its multinomial expansion.
pub fn quadrant_bernstein_type_transformed(
    f: impl Fn(f64, f64) -> f64,
    q: Quadrant,
    n: u32,
    x: f64,
    y: f64,
) -> Result<f64> {
    q.check(x, y)?;
    let (dom, pair, sched) = quadrant_transform(q);
    transformed_stancu(f, &dom, &pair, n, sched, x, y)
}
