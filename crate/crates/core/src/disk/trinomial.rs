use crate::binomial::{pow_log, LnBinomialTable};

/// One term `value * C(n; ex, ey, ez) X^ex Y^ey Z^ez` with `ez = n - ex - ey`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Term {
    pub ex: u32,
    pub ey: u32,
    pub ln_coef: f64,
    pub value: f64,
}

/// A degree-`n` polynomial in `(X, Y, Z)` written in the trinomial
/// Bernstein basis, with `X + Y + Z = 1` on the region of interest.
///
/// Each basis function is evaluated as `exp` of a sum of logarithms, so
/// nothing overflows at high degree and zero arguments follow `0^0 = 1`.
#[derive(Debug, Clone)]
pub(crate) struct TrinomialSum {
    n: u32,
    terms: Vec<Term>,
}

impl TrinomialSum {
    /// `terms` yields `(ex, ey, value)`; the summation order is kept.
    pub fn new(n: u32, terms: impl IntoIterator<Item = (u32, u32, f64)>) -> Self {
        let table = LnBinomialTable::new(n);
        let terms = terms
            .into_iter()
            .map(|(ex, ey, value)| Term {
                ex,
                ey,
                ln_coef: table.multinomial(ex, ey),
                value,
            })
            .collect();
        Self { n, terms }
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        let (lx, ly, lz) = (x.ln(), y.ln(), z.ln());
        self.terms
            .iter()
            .map(|t| {
                let ez = self.n - t.ex - t.ey;
                let w = (t.ln_coef + pow_log(t.ex, lx) + pow_log(t.ey, ly) + pow_log(ez, lz)).exp();
                t.value * w
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_partition_unity() {
        let n = 12;
        let sum = TrinomialSum::new(
            n,
            (0..=n).flat_map(move |k| (0..=n - k).map(move |j| (k, j, 1.0))),
        );
        for &(x, y) in &[(0.2, 0.3), (0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.5, 0.5)] {
            assert!((sum.eval(x, y, 1.0 - x - y) - 1.0).abs() < 1e-13);
        }
    }
}
