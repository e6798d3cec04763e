//! Standard complete fans: projective spaces, products and split projective
//! bundles over projective space.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Fan;
use crate::arith::Int;
use crate::lattice_core::{Lattice, LatticePoint};
use crate::{Error, Result};

/// Largest `n` accepted by [`projbundle_fan`].
pub const PROJBUNDLE_MAX_N: usize = 4;

/// `P^m`: rays `e_1, …, e_m, -(e_1 + … + e_m)`, cones omitting one ray.
pub fn projective_space_fan(m: usize) -> Result<Fan> {
    if m == 0 {
        return Err(Error::InvalidArgument("P^0 has no fan of positive rank".into()));
    }
    let mut rays: Vec<LatticePoint> = (0..m).map(|i| LatticePoint::unit(m, i)).collect();
    rays.push(LatticePoint(vec![-1; m]));
    let cones = (0..=m).map(|skip| (0..=m).filter(|&i| i != skip).collect()).collect();
    Fan::new(Lattice::standard(m), rays, cones)
}

/// Product fan: rays of `a` then rays of `b`, in `Z^{ra} ⊕ Z^{rb}` (both
/// fans taken in integral coordinates).
pub fn product_fan(a: &Fan, b: &Fan) -> Result<Fan> {
    let (ra, rb) = (a.rank(), b.rank());
    let mut rays: Vec<LatticePoint> = a
        .rays()
        .iter()
        .map(|v| LatticePoint(v.iter().copied().chain(core::iter::repeat(0).take(rb)).collect()))
        .collect();
    rays.extend(b.rays().iter().map(|v| LatticePoint(core::iter::repeat(0).take(ra).chain(v.iter().copied()).collect())));
    let k = a.num_rays();
    let mut cones = Vec::new();
    for ca in a.max_cones() {
        for cb in b.max_cones() {
            cones.push(ca.iter().copied().chain(cb.iter().map(|i| i + k)).collect());
        }
    }
    Fan::new(Lattice::standard(ra + rb), rays, cones)
}

/// Ray layout of [`projbundle_fan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjBundleRays {
    pub n: usize,
}

impl ProjBundleRays {
    /// Base rays `ũ_1, …, ũ_n` (their divisors are pullbacks of hyperplanes).
    pub fn base(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i));
        i - 1
    }

    /// Fiber rays `f_0, …, f_n`; the divisor of `f_0` is `O_F(1)`.
    pub fn fiber(&self, k: usize) -> usize {
        assert!(k <= self.n);
        self.n + k
    }
}

/// The fan of `F_a = P(O(a) ⊕ O^n)` over `P^{n-1}` (subspace convention:
/// `p_* O_F(t) = S^t(O(a) ⊕ O^n)`), in `Z^{n-1} ⊕ Z^n`.
///
/// Rays: base `ũ_i = (e_i, 0)` for `i < n`, `ũ_n = (-1, …, -1, a, 0, …, 0)`
/// (the twist sits on `f_1`), fiber `f_0 = (0, -1, …, -1)` and
/// `f_k = (0, e_k)`. Maximal cones omit one base ray and one fiber ray.
/// With this layout `D_{f_0} = O_F(1)`, `D_{ũ_i} = p^*O(1)` and
/// `D_{f_1} = O_F(1) ⊗ p^*O(-a)`.
pub fn projbundle_fan(a: Int, n: usize) -> Result<Fan> {
    if a < 0 {
        return Err(Error::InvalidArgument(format!("negative twist {a}")));
    }
    if !(2..=PROJBUNDLE_MAX_N).contains(&n) {
        return Err(Error::Capacity(format!("projective bundle with n = {n} outside 2..={PROJBUNDLE_MAX_N}")));
    }
    let dim = 2 * n - 1;
    let base = n - 1;
    let mut rays = Vec::with_capacity(2 * n + 1);
    for i in 0..base {
        rays.push(LatticePoint::unit(dim, i));
    }
    let mut last = vec![0; dim];
    last[..base].iter_mut().for_each(|x| *x = -1);
    last[base] = a;
    rays.push(LatticePoint(last));
    let mut f0 = vec![0; dim];
    f0[base..].iter_mut().for_each(|x| *x = -1);
    rays.push(LatticePoint(f0));
    for k in 0..n {
        rays.push(LatticePoint::unit(dim, base + k));
    }
    let mut cones = Vec::with_capacity(n * (n + 1));
    for skip_base in 0..n {
        for skip_fiber in 0..=n {
            cones.push(
                (0..n)
                    .filter(|&i| i != skip_base)
                    .chain((0..=n).filter(|&k| k != skip_fiber).map(|k| n + k))
                    .collect(),
            );
        }
    }
    Fan::new(Lattice::standard(dim), rays, cones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{fan_isomorphic, line_bundle_cohomology, TDivisor};

    #[test]
    fn projective_spaces() {
        for m in 1..=4 {
            let f = projective_space_fan(m).unwrap();
            assert!(f.is_complete() && f.is_smooth());
            assert_eq!(f.max_cones().len(), m + 1);
        }
    }

    #[test]
    fn trivial_bundle_is_a_product() {
        let f = projbundle_fan(0, 2).unwrap();
        let p = product_fan(&projective_space_fan(1).unwrap(), &projective_space_fan(2).unwrap()).unwrap();
        assert!(fan_isomorphic(&f, &p).unwrap().is_some());
    }

    #[test]
    fn picard_rank_two() {
        for n in 2..=4 {
            for a in 0..=3 {
                let f = projbundle_fan(a, n).unwrap();
                assert!(f.is_complete() && f.is_smooth());
                assert_eq!(f.num_rays() - f.rank(), 2);
                assert_eq!(f.max_cones().len(), n * (n + 1));
            }
        }
        assert!(projbundle_fan(2, 1).is_err());
        assert!(projbundle_fan(2, 5).is_err());
    }

    #[test]
    fn divisor_classes() {
        let (a, n) = (2, 2);
        let f = projbundle_fan(a, n).unwrap();
        let layout = ProjBundleRays { n };
        let xi = TDivisor::prime(&f, layout.fiber(0));
        let base = TDivisor::prime(&f, layout.base(1));
        let f1 = TDivisor::prime(&f, layout.fiber(1));
        for i in 1..=n {
            assert!(TDivisor::prime(&f, layout.base(i)).is_linearly_equivalent(&base, &f).unwrap());
        }
        for k in 2..=n {
            assert!(TDivisor::prime(&f, layout.fiber(k)).is_linearly_equivalent(&xi, &f).unwrap());
        }
        assert!(f1.is_linearly_equivalent(&(&xi - &base.scaled(a)), &f).unwrap());
        // h^0(O_F(1)) = h^0(O(2)) + 2 h^0(O) on P^1
        assert_eq!(line_bundle_cohomology(&f, &xi).unwrap().get(0).value(), Some(5));
    }
}
