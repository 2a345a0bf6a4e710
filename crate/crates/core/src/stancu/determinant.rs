use nalgebra::DMatrix;

use super::{CurvilinearDomain, NodeSchedule, StancuOperator};
use crate::error::Result;
use crate::univariate::fill_row;

/// The operator value read off a bordered determinant: an identity block,
/// the inner Bernstein sums in the last column, the outer basis row in the
/// last row and a zero corner. The value is `-det`.
///
/// This is an O(n^3) cross-check of [`super::stancu`], meant for small `n`.
pub fn stancu_determinant(
    f: impl Fn(f64, f64) -> f64,
    dom: &CurvilinearDomain,
    n: u32,
    sched: NodeSchedule,
    x: f64,
    y: f64,
) -> Result<f64> {
    dom.check(x, y)?;
    let op = StancuOperator::new(f, dom, n, sched)?;
    let (u, t) = op.local(x, y);
    let mut basis = Vec::new();
    fill_row(n, u, &mut basis);

    let size = n as usize + 2;
    let last = size - 1;
    let mut m = DMatrix::<f64>::identity(size, size);
    m[(last, last)] = 0.0;
    for (k, &p) in basis.iter().enumerate() {
        m[(k, last)] = op.inner(k, t);
        m[(last, k)] = p;
    }
    Ok(-m.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stancu::stancu;

    #[test]
    fn bordered_identity_for_constants() {
        let v = stancu_determinant(
            |_, _| 1.0,
            &CurvilinearDomain::unit_square(),
            1,
            NodeSchedule::Constant(1),
            0.3,
            0.9,
        )
        .unwrap();
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn x_squared_image() {
        let v = stancu_determinant(
            |x, _| x * x,
            &CurvilinearDomain::simplex(),
            3,
            NodeSchedule::NMinusK,
            0.5,
            0.2,
        )
        .unwrap();
        assert!((v - (0.25 + 0.25 / 3.0)).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_direct_sum() {
        let dom = CurvilinearDomain::unit_square();
        let sched = NodeSchedule::Constant(2);
        let a = stancu_determinant(|x, y| x * y, &dom, 2, sched, 0.3, 0.7).unwrap();
        let b = stancu(|x, y| x * y, &dom, 2, sched, 0.3, 0.7).unwrap();
        assert!((a - b).abs() < 1e-12);
    }
}
