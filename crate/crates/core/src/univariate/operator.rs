use super::{fill_row, Interval, Transform1D};
use crate::error::Result;

/// `sum_k node_value(k) * p_{n,k}(s)` for `s` in `[0, 1]`.
fn combine(n: u32, s: f64, node_value: impl Fn(u32) -> f64) -> f64 {
    let mut row = Vec::new();
    fill_row(n, s, &mut row);
    row.iter()
        .enumerate()
        .filter(|(_, w)| **w != 0.0)
        .map(|(k, w)| w * node_value(k as u32))
        .sum()
}

/// The classical Bernstein operator `B_n f` on `[0, 1]`. For `n = 0` this is
/// `f(0)`.
pub fn bernstein(f: impl Fn(f64) -> f64, n: u32, x: f64) -> Result<f64> {
    bernstein_shifted(f, n, x, &Interval::UNIT)
}

/// The Bernstein operator transported to `iv`, with nodes
/// `(beta - alpha) k / n + alpha`.
pub fn bernstein_shifted(f: impl Fn(f64) -> f64, n: u32, x: f64, iv: &Interval) -> Result<f64> {
    let s = iv.local("x", x)?;
    Ok(combine(n, s, |k| f(iv.node(n, k))))
}

/// `C_n^tau f = B_n(f o tau^-1) o tau` on `[0, 1]`.
pub fn c_tau(f: impl Fn(f64) -> f64, tau: &Transform1D, n: u32, x: f64) -> Result<f64> {
    c_tau_shifted(f, tau, n, x, &Interval::UNIT)
}

/// The shifted form of [`c_tau`]: nodes `tau^-1((beta - alpha) k / n + alpha)`
/// weighted by `p~_{n,k}(tau(x); iv)`.
pub fn c_tau_shifted(
    f: impl Fn(f64) -> f64,
    tau: &Transform1D,
    n: u32,
    x: f64,
    iv: &Interval,
) -> Result<f64> {
    tau.ensure_valid_on(iv)?;
    iv.local("x", x)?;
    let s = iv.normalize(tau.forward(x)).clamp(0.0, 1.0);
    Ok(combine(n, s, |k| f(tau.inverse(iv.node(n, k)))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn classical_examples() {
        assert!(close(bernstein(|_| 2.5, 9, 0.41).unwrap(), 2.5, 1e-14));
        assert!(close(bernstein(|x| x, 10, 0.3).unwrap(), 0.3, 1e-15));
        assert!(close(bernstein(|x| x * x, 4, 0.5).unwrap(), 0.3125, 1e-15));
        assert_eq!(bernstein(|x| x + 7.0, 0, 0.8).unwrap(), 7.0);
        assert!(bernstein(|x| x, 3, 1.2).is_err());
    }

    #[test]
    fn shifted_examples() {
        let iv = Interval::new(-1.0, 2.0).unwrap();
        assert!(close(bernstein_shifted(|x| x, 6, 1.1, &iv).unwrap(), 1.1, 1e-14));
        assert!(close(bernstein_shifted(|_| 3.0, 6, 0.0, &iv).unwrap(), 3.0, 1e-14));
        assert!(close(bernstein_shifted(|x| x * x, 5, 0.5, &iv).unwrap(), 0.7, 1e-14));
    }

    #[test]
    fn tau_examples() {
        let tau = Transform1D::new(|x| x * x, f64::sqrt, Interval::UNIT);
        let t = tau.clone();
        let v = c_tau(move |x| t.forward(x).powi(2), &tau, 4, 0.6).unwrap();
        assert!(close(v, 0.1872, 1e-14));
        let t = tau.clone();
        assert!(close(c_tau(move |x| t.forward(x), &tau, 8, 0.4).unwrap(), 0.16, 1e-14));
        let id = Transform1D::identity(Interval::UNIT);
        let f = |x: f64| (3.0 * x).sin();
        assert_eq!(c_tau(f, &id, 7, 0.3).unwrap(), bernstein(f, 7, 0.3).unwrap());
    }

    #[test]
    fn invalid_tau_is_rejected() {
        let bad = Transform1D::new(|x| 1.0 - x, |x| 1.0 - x, Interval::UNIT);
        assert!(c_tau(|x| x, &bad, 3, 0.5).is_err());
        let iv = Interval::new(-1.0, 2.0).unwrap();
        let elsewhere = Transform1D::identity(Interval::UNIT);
        assert!(c_tau_shifted(|x| x, &elsewhere, 3, 0.5, &iv).is_err());
    }
}
