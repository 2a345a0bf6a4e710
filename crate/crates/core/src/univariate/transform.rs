use std::fmt;
use std::sync::{Arc, OnceLock};

use super::Interval;
use crate::error::{Error, Result};

/// Grid size used when a transform is validated implicitly by an operator.
pub const DEFAULT_VALIDATION_GRID: usize = 1024;

const ENDPOINT_TOL: f64 = 1e-12;
const ROUNDTRIP_TOL: f64 = 1e-10;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A monotone reparameterization `tau` of an interval together with its
/// inverse. The inverse is supplied by the caller; nothing is root-found.
///
/// Construction is cheap and unchecked. Operators validate the transform on
/// first use (the result is cached), so an invalid transform is reported
/// before any evaluation happens.
#[derive(Clone)]
pub struct Transform1D {
    forward: RealFn,
    inverse: RealFn,
    domain: Interval,
    checked: Arc<OnceLock<TransformDiagnostics>>,
}

impl Transform1D {
    pub fn new<F, G>(forward: F, inverse: G, domain: Interval) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            forward: Arc::new(forward),
            inverse: Arc::new(inverse),
            domain,
            checked: Arc::default(),
        }
    }

    pub fn identity(domain: Interval) -> Self {
        Self::new(|x| x, |x| x, domain)
    }

    #[inline]
    pub fn forward(&self, x: f64) -> f64 {
        (self.forward)(x)
    }

    #[inline]
    pub fn inverse(&self, x: f64) -> f64 {
        (self.inverse)(x)
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// Diagnostics on the transform's own domain at the default grid size.
    pub fn diagnostics(&self) -> &TransformDiagnostics {
        self.checked
            .get_or_init(|| sample(self, &self.domain, DEFAULT_VALIDATION_GRID))
    }

    /// Fails unless the transform is valid on `iv`.
    pub(crate) fn ensure_valid_on(&self, iv: &Interval) -> Result<()> {
        if self.domain != *iv {
            return Err(Error::Transform(format!(
                "transform is defined on {} but the operator works on {}",
                self.domain, iv
            )));
        }
        let diag = self.diagnostics();
        if diag.passed() {
            Ok(())
        } else {
            Err(Error::Transform(diag.to_string()))
        }
    }
}

impl fmt::Debug for Transform1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Transform1D")
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// Outcome of sampling a transform's endpoint, monotonicity and inverse
/// contracts on a uniform grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformDiagnostics {
    pub grid_size: usize,
    /// `|tau(alpha) - alpha|`.
    pub alpha_residual: f64,
    /// `|tau(beta) - beta|`.
    pub beta_residual: f64,
    /// Smallest `tau(x_{i+1}) - tau(x_i)` over the grid; must be positive.
    pub min_forward_step: f64,
    /// Largest `|tau^-1(tau(x)) - x|` over the grid.
    pub max_roundtrip_error: f64,
    pub endpoints_ok: bool,
    pub monotone_ok: bool,
    pub roundtrip_ok: bool,
}

impl TransformDiagnostics {
    pub fn passed(&self) -> bool {
        self.endpoints_ok && self.monotone_ok && self.roundtrip_ok
    }
}

impl fmt::Display for TransformDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "endpoint residuals {:e}/{:e}, min step {:e}, round-trip error {:e} on {} points",
            self.alpha_residual,
            self.beta_residual,
            self.min_forward_step,
            self.max_roundtrip_error,
            self.grid_size
        )
    }
}

fn sample(tau: &Transform1D, iv: &Interval, grid_size: usize) -> TransformDiagnostics {
    let last = (grid_size - 1) as f64;
    let at = |i: usize| {
        if i == grid_size - 1 {
            iv.beta()
        } else {
            iv.denormalize(i as f64 / last)
        }
    };
    let alpha_residual = (tau.forward(iv.alpha()) - iv.alpha()).abs();
    let beta_residual = (tau.forward(iv.beta()) - iv.beta()).abs();

    let mut min_step = f64::INFINITY;
    let mut max_roundtrip = 0.0_f64;
    let mut prev = f64::NAN;
    let mut all_finite = true;
    for i in 0..grid_size {
        let x = at(i);
        let t = tau.forward(x);
        let back = tau.inverse(t);
        all_finite &= t.is_finite() && back.is_finite();
        max_roundtrip = max_roundtrip.max((back - x).abs());
        if i > 0 {
            min_step = min_step.min(t - prev);
        }
        prev = t;
    }
    if !all_finite {
        max_roundtrip = f64::NAN;
        min_step = f64::NAN;
    }

    TransformDiagnostics {
        grid_size,
        alpha_residual,
        beta_residual,
        min_forward_step: min_step,
        max_roundtrip_error: max_roundtrip,
        endpoints_ok: alpha_residual <= ENDPOINT_TOL && beta_residual <= ENDPOINT_TOL,
        monotone_ok: min_step > 0.0,
        roundtrip_ok: max_roundtrip <= ROUNDTRIP_TOL,
    }
}

/// Samples `tau` on `grid_size` uniformly spaced points of `iv`.
pub fn validate_transform(
    tau: &Transform1D,
    iv: &Interval,
    grid_size: usize,
) -> Result<TransformDiagnostics> {
    if grid_size < 2 {
        return Err(Error::Parameter {
            name: "grid_size",
            value: grid_size as i64,
            reason: "at least two grid points are needed",
        });
    }
    Ok(sample(tau, iv, grid_size))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_zero_residuals() {
        let d = validate_transform(&Transform1D::identity(Interval::UNIT), &Interval::UNIT, 100)
            .unwrap();
        assert!(d.passed());
        assert_eq!(d.alpha_residual, 0.0);
        assert_eq!(d.beta_residual, 0.0);
        assert_eq!(d.max_roundtrip_error, 0.0);
    }

    #[test]
    fn square_passes_on_unit_interval() {
        let tau = Transform1D::new(|x| x * x, f64::sqrt, Interval::UNIT);
        assert!(validate_transform(&tau, &Interval::UNIT, 100).unwrap().passed());
    }

    #[test]
    fn square_fails_on_symmetric_interval() {
        let iv = Interval::new(-1.0, 1.0).unwrap();
        let tau = Transform1D::new(|x| x * x, f64::sqrt, iv);
        let d = validate_transform(&tau, &iv, 100).unwrap();
        assert!(!d.endpoints_ok);
        assert!(!d.monotone_ok);
        assert!(!d.passed());
        assert!(tau.ensure_valid_on(&iv).is_err());
    }

    #[test]
    fn wrong_inverse_is_caught() {
        let tau = Transform1D::new(|x| x * x, |x| x, Interval::UNIT);
        let d = validate_transform(&tau, &Interval::UNIT, 64).unwrap();
        assert!(d.endpoints_ok && d.monotone_ok && !d.roundtrip_ok);
    }

    #[test]
    fn grid_must_have_two_points() {
        let tau = Transform1D::identity(Interval::UNIT);
        assert!(validate_transform(&tau, &Interval::UNIT, 1).is_err());
    }
}
