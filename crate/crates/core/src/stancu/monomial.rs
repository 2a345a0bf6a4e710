use std::fmt;
use std::str::FromStr;

use super::{CurvilinearDomain, NodeSchedule};
use crate::error::{Error, Result};
use crate::univariate::{basis_shifted, bernstein_shifted};

/// The monomials whose images under the shifted Bernstein-Stancu operator
/// have closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monomial {
    One,
    X,
    Y,
    X2,
    XY,
    Y2,
}

impl Monomial {
    pub const ALL: [Monomial; 6] = [
        Monomial::One,
        Monomial::X,
        Monomial::Y,
        Monomial::X2,
        Monomial::XY,
        Monomial::Y2,
    ];

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            Monomial::One => 1.0,
            Monomial::X => x,
            Monomial::Y => y,
            Monomial::X2 => x * x,
            Monomial::XY => x * y,
            Monomial::Y2 => y * y,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Monomial::One => "1",
            Monomial::X => "x",
            Monomial::Y => "y",
            Monomial::X2 => "x^2",
            Monomial::XY => "xy",
            Monomial::Y2 => "y^2",
        })
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Monomial::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Contract(format!("unknown monomial `{s}`")))
    }
}

/// Closed-form value of the degree-`n` operator applied to a monomial,
/// built from univariate shifted Bernstein operators in `x` and the
/// normalized fibre coordinate `t = (y - phi1(x)) / (phi2(x) - phi1(x))`.
///
/// `y^2` needs the schedule: its image contains `B~_n[(phi2 - phi1)^2 / n_k]`,
/// taken here as the sum over outer nodes with the effective `n_k` and
/// available only for the `n - k` and `k` rules (for `n - k`, only at `x < b`).
pub fn monomial_image(
    which: Monomial,
    dom: &CurvilinearDomain,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    dom.check(x, y)?;
    sched.validate()?;
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "bivariate operators need n >= 1",
        });
    }
    let (x, lo, w) = dom.fibre(x);
    let t = if w > 0.0 { ((y - lo) / w).clamp(0.0, 1.0) } else { 0.0 };
    let iv = dom.x_interval();
    let width = |s: f64| dom.phi2(s) - dom.phi1(s);
    let b = |g: &dyn Fn(f64) -> f64| bernstein_shifted(g, n, x, &iv);

    Ok(match which {
        Monomial::One => 1.0,
        Monomial::X => x,
        Monomial::X2 => x * x + (x - dom.a()) * (dom.b() - x) / f64::from(n),
        Monomial::Y => b(&width)? * t + b(&|s| dom.phi1(s))?,
        Monomial::XY => b(&|s| s * width(s))? * t + b(&|s| s * dom.phi1(s))?,
        Monomial::Y2 => {
            match sched {
                NodeSchedule::NMinusK if x >= dom.b() => {
                    return Err(Error::Contract(
                        "the y^2 closed form for the n-k schedule is singular at x = b".into(),
                    ))
                }
                NodeSchedule::NMinusK | NodeSchedule::K => {}
                NodeSchedule::Constant(_) => {
                    return Err(Error::Contract(
                        "the y^2 closed form is stated for the n-k and k schedules only".into(),
                    ))
                }
            }
            let mut spread = 0.0;
            for k in 0..=n {
                let xk = iv.node(n, k);
                let n_k = f64::from(sched.effective(n, k).0);
                spread += basis_shifted(n, k, x, &iv)? * width(xk).powi(2) / n_k;
            }
            t * t * b(&|s| width(s).powi(2))?
                + t * (1.0 - t) * spread
                + 2.0 * t * b(&|s| width(s) * dom.phi1(s))?
                + b(&|s| dom.phi1(s).powi(2))?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_free_examples() {
        let sq = CurvilinearDomain::unit_square();
        let tri = CurvilinearDomain::simplex();
        let s = NodeSchedule::Constant(4);
        assert_eq!(monomial_image(Monomial::One, &tri, 3, s, 0.2, 0.1).unwrap(), 1.0);
        let v = monomial_image(Monomial::X2, &tri, 10, s, 0.2, 0.1).unwrap();
        assert!((v - 0.056).abs() < 1e-15);
        let v = monomial_image(Monomial::Y, &sq, 5, s, 0.4, 0.9).unwrap();
        assert!((v - 0.9).abs() < 1e-15);
    }

    #[test]
    fn y_squared_contract() {
        let tri = CurvilinearDomain::simplex();
        assert!(monomial_image(Monomial::Y2, &tri, 4, NodeSchedule::Constant(4), 0.2, 0.1).is_err());
        assert!(monomial_image(Monomial::Y2, &tri, 4, NodeSchedule::NMinusK, 1.0, 0.0).is_err());
        assert!(monomial_image(Monomial::Y2, &tri, 4, NodeSchedule::K, 1.0, 0.0).is_ok());
    }

    #[test]
    fn names_parse() {
        for m in Monomial::ALL {
            assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }
    }
}
