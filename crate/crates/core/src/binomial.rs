//! Binomial and multinomial coefficients in linear and log space.
//!
//! Coefficients are formed by the multiplicative recurrence in `f64`, which
//! keeps a relative error of about `k` ulps and stays finite up to degree
//! 1029. Beyond that the log-space routines fall back to a Stirling series
//! for `ln n!`.

use std::f64::consts::PI;

/// Largest degree for which every `C(n, k)` is finite in `f64`.
const MAX_FINITE_DEGREE: u32 = 1029;

/// `C(n, k)` as a float; `0` when `k > n`.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0_f64;
    for i in 1..=k {
        c = c * f64::from(n - k + i) / f64::from(i);
    }
    c
}

/// `ln n!`. Exact products up to 170, Stirling series above.
pub fn ln_factorial(n: u32) -> f64 {
    if n <= 170 {
        let mut p = 1.0_f64;
        for i in 2..=n {
            p *= f64::from(i);
        }
        return p.ln();
    }
    let x = f64::from(n);
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    x * x.ln() - x + 0.5 * (2.0 * PI * x).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)))
}

/// `ln C(n, k)`; `-inf` when `k > n`.
pub fn ln_binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    if n <= MAX_FINITE_DEGREE {
        binomial(n, k).ln()
    } else {
        ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
    }
}

/// `ln (n! / (k! j! (n-k-j)!))`; `-inf` when `k + j > n`.
pub fn ln_multinomial(n: u32, k: u32, j: u32) -> f64 {
    if k + j > n {
        return f64::NEG_INFINITY;
    }
    ln_binomial(n, k) + ln_binomial(n - k, j)
}

/// `k * ln x` with the convention `0 * ln 0 = 0`, i.e. `0^0 = 1`.
#[inline]
pub(crate) fn pow_log(k: u32, ln_x: f64) -> f64 {
    if k == 0 {
        0.0
    } else {
        f64::from(k) * ln_x
    }
}

/// Triangular table of `ln C(m, k)` for `0 <= k <= m <= degree`.
#[derive(Debug, Clone)]
pub struct LnBinomialTable {
    rows: Vec<Vec<f64>>,
}

impl LnBinomialTable {
    pub fn new(degree: u32) -> Self {
        let rows = (0..=degree)
            .map(|m| (0..=m).map(|k| ln_binomial(m, k)).collect())
            .collect();
        Self { rows }
    }

    pub fn degree(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    #[inline]
    pub fn get(&self, m: u32, k: u32) -> f64 {
        self.rows[m as usize][k as usize]
    }

    /// `ln C(n; k, j)` where `n` is the table degree.
    #[inline]
    pub fn multinomial(&self, k: u32, j: u32) -> f64 {
        let n = self.degree();
        self.get(n, k) + self.get(n - k, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials_are_exact() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(10, 0), 1.0);
        assert_eq!(binomial(10, 10), 1.0);
        assert_eq!(binomial(52, 5), 2_598_960.0);
        assert_eq!(binomial(3, 4), 0.0);
    }

    #[test]
    fn stirling_branch_is_continuous() {
        // 171! is still finite, so compare the series against the product.
        let direct: f64 = (2..=171u32).map(|i| f64::from(i).ln()).sum();
        assert!((ln_factorial(171) - direct).abs() < 1e-10);
        assert!((ln_factorial(170) - (2..=170u32).map(|i| f64::from(i).ln()).sum::<f64>()).abs() < 1e-10);
    }

    #[test]
    fn large_degree_uses_factorials() {
        let a = ln_binomial(2000, 1000);
        let b = ln_factorial(2000) - 2.0 * ln_factorial(1000);
        assert_eq!(a, b);
        // ln C(2000,1000) ~ 2000 ln 2 - 0.5 ln(1000 pi)
        assert!((a - (2000.0 * 2f64.ln() - 0.5 * (1000.0 * PI).ln())).abs() < 1e-3);
    }

    #[test]
    fn multinomial_matches_factorials() {
        let v = ln_multinomial(10, 3, 4).exp();
        assert!((v - 4200.0).abs() < 1e-9);
        assert_eq!(ln_multinomial(3, 2, 2), f64::NEG_INFINITY);
        let t = LnBinomialTable::new(10);
        assert!((t.multinomial(3, 4) - ln_multinomial(10, 3, 4)).abs() < 1e-15);
    }

    #[test]
    fn zero_power_convention() {
        assert_eq!(pow_log(0, f64::NEG_INFINITY), 0.0);
        assert_eq!(pow_log(2, f64::NEG_INFINITY), f64::NEG_INFINITY);
    }
}
