use super::trinomial::TrinomialSum;
use crate::error::{Error, Result};
use crate::stancu::{stancu, CurvilinearDomain, NodeSchedule};
use crate::univariate::DOMAIN_TOL;

/// The Bernstein-Stancu operator on `[-1, 1]^2`: nodes
/// `((2k - n)/n, (2j - n_k)/n_k)`, weights in `(x + 1)/2` and `(y + 1)/2`.
pub fn square_bernstein(
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    let dom = CurvilinearDomain::rectangle(-1.0, 1.0, -1.0, 1.0)?;
    stancu(f, &dom, n, sched, x, y)
}

fn check_simplex(x: f64, y: f64) -> Result<()> {
    let inside = x >= -DOMAIN_TOL && y >= -DOMAIN_TOL && x + y <= 1.0 + DOMAIN_TOL;
    if inside && x.is_finite() && y.is_finite() {
        Ok(())
    } else {
        Err(Error::outside(x, y, "the unit simplex"))
    }
}

/// The Bernstein-Stancu operator on the simplex `x, y >= 0, x + y <= 1`.
///
/// With `n_k = n - k` this is the classical trinomial Bernstein operator and
/// is evaluated in that form; other schedules go through the Duffy
/// parameterization `y = v (1 - x)`.
pub fn simplex_bernstein(
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    if sched != NodeSchedule::NMinusK {
        return simplex_bernstein_duffy(f, n, sched, x, y);
    }
    check_simplex(x, y)?;
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            reason: "bivariate operators need n >= 1",
        });
    }
    let nf = f64::from(n);
    let terms = (0..=n).flat_map(|k| {
        let f = &f;
        (0..=n - k).map(move |j| (k, j, f(f64::from(k) / nf, f64::from(j) / nf)))
    });
    let sum = TrinomialSum::new(n, terms.collect::<Vec<_>>());
    let (x, y) = (x.max(0.0), y.max(0.0));
    Ok(sum.eval(x, y, (1.0 - x - y).max(0.0)))
}

/// [`simplex_bernstein`] through the Duffy parameterization for any schedule.
pub fn simplex_bernstein_duffy(
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    check_simplex(x, y)?;
    stancu(f, &CurvilinearDomain::simplex(), n, sched, x, y)
}

/// The Bernstein-Stancu operator on the unit disk viewed as
/// `-1 <= x <= 1, |y| <= sqrt(1 - x^2)`. At `x = +-1` it returns `f(+-1, 0)`.
pub fn ball_stancu(
    f: impl Fn(f64, f64) -> f64,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    stancu(f, &CurvilinearDomain::disk(), n, sched, x, y)
}
