//! Univariate Bernstein bases and operators on `[0, 1]` and on a general
//! interval `[alpha, beta]`, including the operators conjugated by a
//! monotone reparameterization `tau`.

mod basis;
mod operator;
mod transform;

pub use basis::{
    basis_argmax, basis_classical, basis_row, basis_shifted, basis_shifted_derivative, BasisRow,
};
pub(crate) use basis::fill_row;
pub use operator::{bernstein, bernstein_shifted, c_tau, c_tau_shifted};
pub use transform::{
    validate_transform, Transform1D, TransformDiagnostics, DEFAULT_VALIDATION_GRID,
};

use crate::error::{Error, Result};

/// Slack allowed when checking that a coordinate lies in a closed set.
pub(crate) const DOMAIN_TOL: f64 = 1e-12;

/// A finite closed interval `[alpha, beta]` with `alpha < beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    alpha: f64,
    beta: f64,
}

impl Interval {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && alpha < beta) {
            return Err(Error::Interval { alpha, beta });
        }
        Ok(Self { alpha, beta })
    }

    pub const UNIT: Interval = Interval {
        alpha: 0.0,
        beta: 1.0,
    };

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn width(&self) -> f64 {
        self.beta - self.alpha
    }

    /// Affine map onto `[0, 1]`.
    #[inline]
    pub fn normalize(&self, x: f64) -> f64 {
        (x - self.alpha) / (self.beta - self.alpha)
    }

    /// The image of `s` in `[0, 1]` under `s -> (beta - alpha) s + alpha`.
    #[inline]
    pub fn denormalize(&self, s: f64) -> f64 {
        (self.beta - self.alpha) * s + self.alpha
    }

    /// The node `(beta - alpha) k / n + alpha`; `alpha` when `n = 0`.
    #[inline]
    pub fn node(&self, n: u32, k: u32) -> f64 {
        if n == 0 {
            self.alpha
        } else {
            self.denormalize(f64::from(k) / f64::from(n))
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.alpha - DOMAIN_TOL && x <= self.beta + DOMAIN_TOL
    }

    /// Normalized coordinate of `x`, clamped to `[0, 1]`, or a domain error.
    pub(crate) fn local(&self, what: &'static str, x: f64) -> Result<f64> {
        if !self.contains(x) {
            return Err(Error::domain(what, x, self));
        }
        Ok(self.normalize(x).clamp(0.0, 1.0))
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_or_infinite() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn nodes_span_the_interval() {
        let iv = Interval::new(-1.0, 2.0).unwrap();
        assert_eq!(iv.node(3, 0), -1.0);
        assert_eq!(iv.node(3, 3), 2.0);
        assert_eq!(iv.node(0, 0), -1.0);
        assert!((iv.node(5, 2) - 0.2).abs() < 1e-15);
    }
}
