use super::trinomial::TrinomialSum;
use super::Quadrant;
use crate::error::Result;

/// Which of the two quadrant constructions to use. They expand to the same
/// set of trinomial terms but index (and therefore sum) them differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadrantForm {
    /// The Bernstein-Stancu operator of the quadrant mapped onto the simplex
    /// by `u = x^2, v = y^2 / (1 - x^2)`, with `n_k = n - k`; indices run
    /// `k <= n, j <= n - k` in every quadrant and only node signs change.
    Stancu,
    /// The Bernstein-type operators built from `tau = +-x^2`,
    /// `sigma_x = +-y^2 / sqrt(1 - x^2)`, each quadrant with its own
    /// index layout and schedule.
    BernsteinType,
}

/// A node `(+-sqrt(px / n), +-sqrt(py / n))` of a quadrant operator, kept in
/// integer form so nodes shared by adjacent quadrants compare exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadrantNode {
    pub quadrant: Quadrant,
    pub k: u32,
    pub j: u32,
    pub px: u32,
    pub py: u32,
}

impl QuadrantNode {
    /// The node as a point; an axis coordinate is always `+0.0`.
    pub fn point(&self, n: u32) -> (f64, f64) {
        let (neg_x, neg_y) = self.quadrant.signs();
        let coord = |p: u32, neg: bool| {
            let r = (f64::from(p) / f64::from(n)).sqrt();
            if neg && p > 0 {
                -r
            } else {
                r
            }
        };
        (coord(self.px, neg_x), coord(self.py, neg_y))
    }

    /// Key identifying the geometric point, ignoring which quadrant and
    /// index produced it.
    pub fn location(&self) -> (i64, i64) {
        let (neg_x, neg_y) = self.quadrant.signs();
        let signed = |p: u32, neg: bool| if neg { -i64::from(p) } else { i64::from(p) };
        (signed(self.px, neg_x), signed(self.py, neg_y))
    }
}

/// The nodes of one quadrant operator in summation order. The exponents of
/// `x^2` and `y^2` in a node's weight are always `px` and `py`.
pub fn quadrant_nodes(q: Quadrant, form: QuadrantForm, n: u32) -> Vec<QuadrantNode> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for k in 0..=n {
        let inner = match (form, q) {
            (QuadrantForm::Stancu, _) | (_, Quadrant::B1) | (_, Quadrant::B4) => n - k,
            (_, Quadrant::B2) | (_, Quadrant::B3) => k,
        };
        for j in 0..=inner {
            let (px, py) = match (form, q) {
                (QuadrantForm::Stancu, _) | (_, Quadrant::B1) => (k, j),
                (_, Quadrant::B2) => (n - k, j),
                (_, Quadrant::B3) => (n - k, k - j),
                (_, Quadrant::B4) => (k, n - k - j),
            };
            out.push(QuadrantNode {
                quadrant: q,
                k,
                j,
                px,
                py,
            });
        }
    }
    out
}

/// A quadrant operator in its degree-`2n` multinomial form, with the field
/// sampled at the nodes.
#[derive(Debug, Clone)]
pub struct QuadrantOperator {
    quadrant: Quadrant,
    form: QuadrantForm,
    n: u32,
    sum: TrinomialSum,
}

impl QuadrantOperator {
    pub fn new(f: impl Fn(f64, f64) -> f64, q: Quadrant, form: QuadrantForm, n: u32) -> Self {
        let terms = quadrant_nodes(q, form, n).into_iter().map(|node| {
            let (x, y) = node.point(n);
            (node.px, node.py, f(x, y))
        });
        Self {
            quadrant: q,
            form,
            n,
            sum: TrinomialSum::new(n, terms.collect::<Vec<_>>()),
        }
    }

    pub fn quadrant(&self) -> Quadrant {
        self.quadrant
    }

    pub fn form(&self) -> QuadrantForm {
        self.form
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        self.quadrant.check(x, y)?;
        Ok(self.eval_unchecked(x, y))
    }

    /// Evaluates the polynomial in `(x^2, y^2, 1 - x^2 - y^2)` without the
    /// quadrant test; the rim slack is clamped away.
    pub(crate) fn eval_unchecked(&self, x: f64, y: f64) -> f64 {
        let (xx, yy) = (x * x, y * y);
        let zz = (1.0 - xx - yy).max(0.0);
        self.sum.eval(xx, yy, zz)
    }
}

/// Quadrant operator obtained from the Bernstein-Stancu operator on the
/// simplex with `n_k = n - k`.
pub fn quadrant_stancu(f: impl Fn(f64, f64) -> f64, q: Quadrant, n: u32, x: f64, y: f64) -> Result<f64> {
    q.check(x, y)?;
    Ok(QuadrantOperator::new(f, q, QuadrantForm::Stancu, n).eval_unchecked(x, y))
}

/// Quadrant Bernstein-type operator in closed form.
pub fn quadrant_bernstein_type(
    f: impl Fn(f64, f64) -> f64,
    q: Quadrant,
    n: u32,
    x: f64,
    y: f64,
) -> Result<f64> {
    q.check(x, y)?;
    Ok(QuadrantOperator::new(f, q, QuadrantForm::BernsteinType, n).eval_unchecked(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_counts_and_signs() {
        for form in [QuadrantForm::Stancu, QuadrantForm::BernsteinType] {
            for q in Quadrant::ALL {
                let nodes = quadrant_nodes(q, form, 7);
                assert_eq!(nodes.len(), 36);
                for node in nodes {
                    assert!(node.px + node.py <= 7);
                    let (x, y) = node.point(7);
                    assert!(q.contains(x, y));
                }
            }
        }
    }

    #[test]
    fn bernstein_type_b4_layout() {
        let nodes = quadrant_nodes(Quadrant::B4, QuadrantForm::BernsteinType, 4);
        let last = nodes.iter().find(|n| n.k == 1 && n.j == 3).unwrap();
        // f(sqrt(k/n), -sqrt(1 - (k + j)/n))
        assert_eq!(last.point(4), (0.5, 0.0));
        let first = nodes.iter().find(|n| n.k == 1 && n.j == 0).unwrap();
        assert_eq!(first.point(4), (0.5, -(0.75_f64).sqrt()));
    }

    #[test]
    fn examples() {
        for q in Quadrant::ALL {
            let (sx, sy) = q.signs();
            let (x, y) = (if sx { -0.3 } else { 0.3 }, if sy { -0.4 } else { 0.4 });
            assert!((quadrant_stancu(|_, _| 1.0, q, 9, x, y).unwrap() - 1.0).abs() < 1e-13);
            assert!((quadrant_bernstein_type(|_, _| 1.0, q, 9, x, y).unwrap() - 1.0).abs() < 1e-13);
        }
        let v = quadrant_stancu(|x, _| x * x, Quadrant::B1, 5, 0.6, 0.3).unwrap();
        assert!((v - 0.36).abs() < 1e-14);
        let v = quadrant_bernstein_type(|_, y| y * y, Quadrant::B1, 6, 0.2, 0.5).unwrap();
        assert!((v - 0.25).abs() < 1e-14);
        assert!(quadrant_stancu(|_, _| 1.0, Quadrant::B1, 5, -0.2, 0.1).is_err());
    }

    #[test]
    fn b1_and_b2_meet_on_the_y_axis() {
        let f = |x: f64, y: f64| (x * x - y * y).exp() - x * y;
        for &y in &[0.0, 0.3, 0.77, 1.0] {
            let a = quadrant_stancu(f, Quadrant::B1, 11, 0.0, y).unwrap();
            let b = quadrant_stancu(f, Quadrant::B2, 11, 0.0, y).unwrap();
            assert!((a - b).abs() < 1e-14);
        }
    }
}
