use super::{stancu, CurvilinearDomain, NodeSchedule};
use crate::error::{Error, Result};

/// One row of a rate probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub n: u32,
    /// Operator value minus `f` at the probe point.
    pub residual: f64,
    /// `n * residual`; bounded when the residual is `O(1/n)`.
    pub scaled: f64,
}

/// Residuals of the operator with `n_k = n` at `point` for each `n`.
pub fn voronovskaja_probe(
    f: impl Fn(f64, f64) -> f64,
    dom: &CurvilinearDomain,
    point: (f64, f64),
    n_list: &[u32],
) -> Result<Vec<ProbeRow>> {
    voronovskaja_probe_with(f, dom, NodeSchedule::Constant, point, n_list)
}

/// As [`voronovskaja_probe`] with the schedule chosen per degree.
pub fn voronovskaja_probe_with(
    f: impl Fn(f64, f64) -> f64,
    dom: &CurvilinearDomain,
    schedule: impl Fn(u32) -> NodeSchedule,
    point: (f64, f64),
    n_list: &[u32],
) -> Result<Vec<ProbeRow>> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Contract("degrees must be strictly increasing".into()));
    }
    let (x, y) = point;
    let target = f(x, y);
    n_list
        .iter()
        .map(|&n| {
            let residual = stancu(&f, dom, n, schedule(n), x, y)? - target;
            Ok(ProbeRow {
                n,
                residual,
                scaled: f64::from(n) * residual,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_in_x_has_no_residual() {
        let rows =
            voronovskaja_probe(|x, _| 3.0 * x, &CurvilinearDomain::simplex(), (0.3, 0.2), &[5, 9])
                .unwrap();
        assert!(rows.iter().all(|r| r.residual.abs() < 1e-14));
    }

    #[test]
    fn x_squared_rate_is_exact() {
        let rows = voronovskaja_probe(
            |x, _| x * x,
            &CurvilinearDomain::unit_square(),
            (0.5, 0.3),
            &[10, 20, 40],
        )
        .unwrap();
        for r in rows {
            assert!((r.scaled - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn degrees_must_increase() {
        let dom = CurvilinearDomain::unit_square();
        assert!(voronovskaja_probe(|x, _| x, &dom, (0.5, 0.5), &[10, 10]).is_err());
    }
}
