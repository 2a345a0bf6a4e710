use super::{Interval, DOMAIN_TOL};
use crate::binomial::{ln_binomial, pow_log};
use crate::error::{Error, Result};

/// One row `p_{n,0}(x), ..., p_{n,n}(x)` of the Bernstein basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisRow {
    n: u32,
    values: Vec<f64>,
}

impl BasisRow {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// `C(n,k) s^k (1-s)^(n-k)` for `s` already in `[0, 1]`, evaluated in log
/// space with `0^0 = 1`.
#[inline]
pub(crate) fn basis_value(n: u32, k: u32, s: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    if s <= 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if s >= 1.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    (ln_binomial(n, k) + pow_log(k, s.ln()) + pow_log(n - k, (-s).ln_1p())).exp()
}

/// Writes the degree-`n` row at `s` into `out` (resized to `n + 1`).
///
/// The row is built by running products outward from the mode, where the
/// unnormalized value is 1, then divided by its sum. Nothing overflows and
/// the tails underflow to zero gracefully.
pub(crate) fn fill_row(n: u32, s: f64, out: &mut Vec<f64>) {
    let len = n as usize + 1;
    out.clear();
    out.resize(len, 0.0);
    if s <= 0.0 {
        out[0] = 1.0;
        return;
    }
    if s >= 1.0 {
        out[len - 1] = 1.0;
        return;
    }
    let mode = ((f64::from(n) + 1.0) * s).floor().min(f64::from(n)) as usize;
    out[mode] = 1.0;
    let up = s / (1.0 - s);
    for k in mode..len - 1 {
        out[k + 1] = out[k] * (n as usize - k) as f64 / (k + 1) as f64 * up;
    }
    let down = (1.0 - s) / s;
    for k in (1..=mode).rev() {
        out[k - 1] = out[k] * k as f64 / (n as usize - k + 1) as f64 * down;
    }
    let total: f64 = out.iter().sum();
    for v in out.iter_mut() {
        *v /= total;
    }
}

fn check_unit(x: f64) -> Result<f64> {
    if !(-DOMAIN_TOL..=1.0 + DOMAIN_TOL).contains(&x) {
        return Err(Error::domain("x", x, "[0, 1]"));
    }
    Ok(x.clamp(0.0, 1.0))
}

fn check_index(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(Error::Parameter {
            name: "k",
            value: i64::from(k),
            reason: "basis index exceeds the degree",
        });
    }
    Ok(())
}

/// The classical basis polynomial `C(n,k) x^k (1-x)^(n-k)` on `[0, 1]`.
pub fn basis_classical(n: u32, k: u32, x: f64) -> Result<f64> {
    check_index(n, k)?;
    let s = check_unit(x)?;
    Ok(basis_value(n, k, s))
}

/// All `n + 1` basis values at `x`; stable for large `n`.
pub fn basis_row(n: u32, x: f64) -> Result<BasisRow> {
    let s = check_unit(x)?;
    let mut values = Vec::new();
    fill_row(n, s, &mut values);
    Ok(BasisRow { n, values })
}

/// The basis transported to `iv`: `p_{n,k}((x - alpha) / (beta - alpha))`.
pub fn basis_shifted(n: u32, k: u32, x: f64, iv: &Interval) -> Result<f64> {
    check_index(n, k)?;
    let s = iv.local("x", x)?;
    Ok(basis_value(n, k, s))
}

/// Derivative of [`basis_shifted`] in `x`, from the degree-lowering
/// recurrence `n (p_{n-1,k-1} - p_{n-1,k}) / (beta - alpha)`.
pub fn basis_shifted_derivative(n: u32, k: u32, x: f64, iv: &Interval) -> Result<f64> {
    check_index(n, k)?;
    let s = iv.local("x", x)?;
    if n == 0 {
        return Ok(0.0);
    }
    let left = if k == 0 { 0.0 } else { basis_value(n - 1, k - 1, s) };
    let right = if k == n { 0.0 } else { basis_value(n - 1, k, s) };
    Ok(f64::from(n) * (left - right) / iv.width())
}

/// Location and height of the unique maximum of `p~_{n,k}` on `iv`.
pub fn basis_argmax(n: u32, k: u32, iv: &Interval) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "the degree-0 basis is constant and has no unique maximum",
        });
    }
    check_index(n, k)?;
    let s = f64::from(k) / f64::from(n);
    Ok((iv.denormalize(s), basis_value(n, k, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_and_endpoints() {
        assert_eq!(basis_classical(2, 1, 0.5).unwrap(), 0.5);
        assert_eq!(basis_classical(7, 0, 0.0).unwrap(), 1.0);
        assert_eq!(basis_classical(7, 7, 1.0).unwrap(), 1.0);
        assert_eq!(basis_classical(7, 3, 0.0).unwrap(), 0.0);
        assert_eq!(basis_classical(0, 0, 0.3).unwrap(), 1.0);
    }

    #[test]
    fn domain_errors() {
        assert!(basis_classical(3, 4, 0.5).is_err());
        assert!(basis_classical(3, 1, 1.5).is_err());
        assert!(basis_classical(3, 1, -0.1).is_err());
        let iv = Interval::new(-1.0, 2.0).unwrap();
        assert!(basis_shifted(3, 1, 2.5, &iv).is_err());
        assert!(basis_row(4, f64::NAN).is_err());
    }

    #[test]
    fn linear_row() {
        let row = basis_row(1, 0.25).unwrap();
        assert_eq!(row.values(), &[0.75, 0.25]);
    }

    #[test]
    fn row_is_total_at_extreme_degree() {
        for &x in &[0.0, 1e-300, 1e-9, 0.5, 0.999, 1.0 - 1e-16, 1.0] {
            let row = basis_row(400, x).unwrap();
            assert!(row.values().iter().all(|v| v.is_finite() && *v >= 0.0));
            assert!((row.sum() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn shifted_endpoint_deltas() {
        let iv = Interval::new(-1.0, 2.0).unwrap();
        assert_eq!(basis_shifted(3, 3, 2.0, &iv).unwrap(), 1.0);
        assert_eq!(basis_shifted(3, 0, -1.0, &iv).unwrap(), 1.0);
        assert_eq!(basis_shifted(3, 1, 2.0, &iv).unwrap(), 0.0);
    }

    #[test]
    fn derivative_special_cases() {
        let unit = Interval::UNIT;
        for &x in &[0.0, 0.3, 0.9] {
            assert!((basis_shifted_derivative(1, 1, x, &unit).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!(basis_shifted_derivative(4, 2, 0.5, &unit).unwrap().abs() < 1e-15);
        assert_eq!(basis_shifted_derivative(0, 0, 0.5, &unit).unwrap(), 0.0);
    }

    #[test]
    fn argmax_values() {
        let unit = Interval::UNIT;
        assert_eq!(basis_argmax(5, 0, &unit).unwrap(), (0.0, 1.0));
        let (loc, val) = basis_argmax(2, 1, &unit).unwrap();
        assert_eq!(loc, 0.5);
        assert!((val - 0.5).abs() < 1e-15);
        let iv = Interval::new(-1.0, 2.0).unwrap();
        assert!((basis_argmax(5, 2, &iv).unwrap().0 - 0.2).abs() < 1e-15);
        assert!(basis_argmax(0, 0, &unit).is_err());
    }
}
