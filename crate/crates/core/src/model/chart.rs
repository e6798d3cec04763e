use alloc::format;
use alloc::vec::Vec;

use super::{build_model, expected_fan, ConeName, Model};
use crate::arith::{dot, integral, Int};
use crate::lattice_core::{IntMatrix, LatticePoint};
use crate::{Error, Result};

/// Coordinates on the affine chart `U_τ` of a maximal cone of the blow-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartReport {
    /// Ray labels of the cone, ascending.
    pub cone: Vec<usize>,
    /// `dual_basis[k]` pairs to 1 with the `k`-th ray and 0 with the others,
    /// written in the coordinates dual to `z_1, …, z_{2n}`.
    pub dual_basis: Vec<Vec<Int>>,
    /// Determinant of the ray matrix in an integral basis of `N`.
    pub det: Int,
    /// Exponent vector of the monomial generating `m·O_X` on the chart.
    pub generator: Vec<Int>,
    /// Vanishing order of the local generator along each ray of the cone.
    pub orders: Vec<(usize, Int)>,
    /// Every ideal generator is a multiple of the local one on the chart.
    pub principal: bool,
}

impl ChartReport {
    /// Order along the ray with the given label, if it belongs to the cone.
    pub fn order_along(&self, label: usize) -> Option<Int> {
        self.orders.iter().find(|(l, _)| *l == label).map(|&(_, o)| o)
    }
}

impl ConeName {
    /// Ray labels of the named cone on the level-`n` model.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let omit = match *self {
            Self::Mixed(i, j) => [2 * i, 2 * j - 1],
            Self::Even(i) => [2 * i, 2 * n + 1],
            Self::Odd(j) => [2 * j - 1, 2 * n + 2],
        };
        (1..=2 * n + 2).filter(|k| !omit.contains(k)).collect()
    }
}

/// The chart of the maximal cone with ray labels `cone`.
pub fn local_chart_coordinates(n: usize, cone: &[usize]) -> Result<ChartReport> {
    chart_on(&build_model(n)?, cone)
}

pub(crate) fn chart_on(model: &Model, cone: &[usize]) -> Result<ChartReport> {
    let n = model.data.n;
    let fan = expected_fan(n)?;
    let mut labels = cone.to_vec();
    labels.sort_unstable();
    labels.dedup();
    let idx: Vec<usize> = labels.iter().map(|&k| k.wrapping_sub(1)).collect();
    if labels.len() != fan.rank() || !fan.max_cones().iter().any(|c| *c == idx) {
        return Err(Error::InvalidArgument(format!("{cone:?} is not a maximal cone of the blow-up")));
    }
    let rays: Vec<&LatticePoint> = idx.iter().map(|&i| fan.ray(i)).collect();
    let g = IntMatrix::from_rows(&rays, fan.rank())?;
    let det = g.det();
    if det.abs() != 1 {
        return Err(Error::NotSmooth(format!("cone {labels:?} has determinant {det}")));
    }
    // columns of G^{-1} are the dual basis in M-coordinates
    let (inv, den) = g.inverse()?;
    debug_assert_eq!(den, 1);
    let m = model.lattice.dual();
    let dual_basis: Vec<Vec<Int>> = inv
        .col_vecs()
        .iter()
        .map(|c| integral(&m.to_reference(c)))
        .collect::<Result<_>>()?;
    let gens = model.ideal.generators();
    let order = |v: &LatticePoint| gens.iter().map(|u| dot(u, v)).min().expect("nonempty ideal");
    let orders_vec: Vec<Int> = rays.iter().map(|v| order(v)).collect();
    let local = LatticePoint(inv.mul_vec(&orders_vec).into_iter().map(|x| x / den).collect());
    let principal = gens.iter().all(|u| rays.iter().all(|v| dot(u, v) >= dot(&local, v)))
        && gens.contains(&local);
    let generator = integral(&m.to_reference(&local))?;
    Ok(ChartReport {
        orders: labels.iter().copied().zip(orders_vec).collect(),
        cone: labels,
        dual_basis,
        det,
        generator,
        principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn primed_chart_n1() {
        // σ'_1 = <e_1, e_4>
        let c = local_chart_coordinates(1, &ConeName::Even(1).labels(1)).unwrap();
        assert_eq!(c.cone, vec![1, 4]);
        assert_eq!(c.det.abs(), 1);
        assert_eq!(c.generator, vec![0, 3]);
        assert!(c.principal);
        assert_eq!(c.order_along(4), Some(1));
        assert!(c.dual_basis.contains(&vec![0, 3]));
    }

    #[test]
    fn mixed_chart_n2() {
        let c = local_chart_coordinates(2, &ConeName::Mixed(1, 1).labels(2)).unwrap();
        assert_eq!(c.generator, vec![1, 1, 0, 0]);
        assert_eq!(c.order_along(5), Some(1));
        assert_eq!(c.order_along(6), Some(1));
        assert!(c.principal);
    }

    #[test]
    fn rejects_non_cones() {
        assert!(local_chart_coordinates(1, &[1, 2]).is_err());
        assert!(local_chart_coordinates(1, &[1, 9]).is_err());
    }
}
