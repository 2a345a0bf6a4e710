use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::univariate::{Interval, DOMAIN_TOL};

/// Grid size used to validate `phi1 < phi2`.
pub const DOMAIN_VALIDATION_GRID: usize = 1024;

type Curve = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Which ends of `[a, b]` have `phi1 = phi2` (a pinched edge, as at
/// `x = +-1` on the disk).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegenerateEdges {
    pub left: bool,
    pub right: bool,
}

/// The region `a <= x <= b, phi1(x) <= y <= phi2(x)`.
#[derive(Clone)]
pub struct CurvilinearDomain {
    xs: Interval,
    phi1: Curve,
    phi2: Curve,
    edges: DegenerateEdges,
    name: Arc<str>,
}

impl CurvilinearDomain {
    /// Validates `phi1 < phi2` on a uniform grid of [`DOMAIN_VALIDATION_GRID`]
    /// points. Equality is accepted only at `x = a` or `x = b` and is
    /// reported through [`CurvilinearDomain::degenerate_edges`].
    pub fn new<P, Q>(a: f64, b: f64, phi1: P, phi2: Q) -> Result<Self>
    where
        P: Fn(f64) -> f64 + Send + Sync + 'static,
        Q: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::named(format!("domain over [{a}, {b}]"), a, b, phi1, phi2)
    }

    fn named<P, Q>(name: impl Into<Arc<str>>, a: f64, b: f64, phi1: P, phi2: Q) -> Result<Self>
    where
        P: Fn(f64) -> f64 + Send + Sync + 'static,
        Q: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let xs = Interval::new(a, b)?;
        let last = DOMAIN_VALIDATION_GRID - 1;
        let mut edges = DegenerateEdges::default();
        for i in 0..=last {
            let x = if i == last {
                b
            } else {
                xs.denormalize(i as f64 / last as f64)
            };
            let (lo, hi) = (phi1(x), phi2(x));
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(Error::CurvilinearDomain(format!(
                    "boundary curves are not finite at x = {x}"
                )));
            }
            if lo < hi {
                continue;
            }
            if lo == hi && i == 0 {
                edges.left = true;
            } else if lo == hi && i == last {
                edges.right = true;
            } else {
                return Err(Error::CurvilinearDomain(format!(
                    "phi1(x) = {lo} is not below phi2(x) = {hi} at x = {x}"
                )));
            }
        }
        Ok(Self {
            xs,
            phi1: Arc::new(phi1),
            phi2: Arc::new(phi2),
            edges,
            name: name.into(),
        })
    }

    pub fn unit_square() -> Self {
        Self::rectangle(0.0, 1.0, 0.0, 1.0).expect("unit square is valid")
    }

    pub fn rectangle(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::named(
            format!("[{a}, {b}] x [{c}, {d}]"),
            a,
            b,
            move |_| c,
            move |_| d,
        )
    }

    /// The triangle `x, y >= 0, x + y <= 1`.
    pub fn simplex() -> Self {
        Self::named("the unit simplex", 0.0, 1.0, |_| 0.0, |x| 1.0 - x).expect("simplex is valid")
    }

    /// The closed unit disk.
    pub fn disk() -> Self {
        Self::named(
            "the unit disk",
            -1.0,
            1.0,
            |x| -half_chord(x),
            half_chord,
        )
        .expect("disk is valid")
    }

    pub fn a(&self) -> f64 {
        self.xs.alpha()
    }

    pub fn b(&self) -> f64 {
        self.xs.beta()
    }

    pub fn x_interval(&self) -> Interval {
        self.xs
    }

    #[inline]
    pub fn phi1(&self, x: f64) -> f64 {
        (self.phi1)(x)
    }

    #[inline]
    pub fn phi2(&self, x: f64) -> f64 {
        (self.phi2)(x)
    }

    pub fn degenerate_edges(&self) -> DegenerateEdges {
        self.edges
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.xs.contains(x) && {
            let x = x.clamp(self.a(), self.b());
            y >= self.phi1(x) - DOMAIN_TOL && y <= self.phi2(x) + DOMAIN_TOL
        }
    }

    /// `(x, phi1(x), phi2(x) - phi1(x))` for a point known to be inside;
    /// `x` is clamped onto `[a, b]`.
    pub(crate) fn fibre(&self, x: f64) -> (f64, f64, f64) {
        let x = x.clamp(self.a(), self.b());
        let lo = self.phi1(x);
        (x, lo, (self.phi2(x) - lo).max(0.0))
    }

    pub(crate) fn check(&self, x: f64, y: f64) -> Result<()> {
        if x.is_finite() && y.is_finite() && self.contains(x, y) {
            Ok(())
        } else {
            Err(Error::outside(x, y, self))
        }
    }
}

/// `sqrt(1 - x^2)`, written to stay accurate near `x = +-1`.
#[inline]
pub(crate) fn half_chord(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).max(0.0).sqrt()
}

impl fmt::Display for CurvilinearDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Debug for CurvilinearDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CurvilinearDomain")
            .field("name", &self.name)
            .field("x", &self.xs)
            .field("edges", &self.edges)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_has_two_pinched_edges() {
        let d = CurvilinearDomain::disk();
        assert_eq!(
            d.degenerate_edges(),
            DegenerateEdges {
                left: true,
                right: true
            }
        );
        assert!(d.contains(0.6, 0.8));
        assert!(!d.contains(0.6, 0.81));
    }

    #[test]
    fn simplex_pinches_on_the_right() {
        let e = CurvilinearDomain::simplex().degenerate_edges();
        assert!(!e.left && e.right);
    }

    #[test]
    fn interior_crossing_is_rejected() {
        assert!(CurvilinearDomain::new(0.0, 1.0, |x| x, |_| 0.5).is_err());
        assert!(CurvilinearDomain::new(0.0, 1.0, |_| 0.0, |x| (x - 0.5).abs() - 0.1).is_err());
        assert!(CurvilinearDomain::new(1.0, 0.0, |_| 0.0, |_| 1.0).is_err());
        assert!(CurvilinearDomain::new(0.0, 1.0, |_| 0.0, |x| 1.0 / (x - 0.5)).is_err());
    }
}
