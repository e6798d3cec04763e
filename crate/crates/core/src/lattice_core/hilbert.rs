//! Hilbert bases of simplicial affine monoids `C ∩ L`.
//!
//! Every element of the monoid is a point of the half-open fundamental
//! parallelepiped plus a nonnegative integer combination of the primitive
//! generators, so the Hilbert basis is found among the generators and the
//! (finitely many) nonzero parallelepiped points. Enumeration goes through
//! the Smith normal form of the generator matrix, whose invariant factors
//! index the cosets `L / (generated sublattice)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Cone, IntMatrix, LatticePoint};
use crate::arith::Int;
use crate::{Error, Result};

/// Default rank cap for Hilbert basis computations.
pub const DEFAULT_MAX_RANK: usize = 8;

/// Number of parallelepiped points we are willing to enumerate.
const MAX_INDEX: Int = 1 << 20;

/// The minimal generating set of the monoid of lattice points in a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    monoid_cone: Cone,
    elements: Vec<LatticePoint>,
}

/// Barycentric coordinates scaled by `|det|`: `x = G * coeffs / scale`.
struct Barycentric {
    adj: IntMatrix,
    sign: Int,
    scale: Int,
}

impl Barycentric {
    fn new(g: &IntMatrix) -> Result<Self> {
        let det = g.det();
        if det == 0 {
            return Err(Error::Degenerate("singular generator matrix".into()));
        }
        let (inv, den) = g.inverse()?;
        // inv / den = G^{-1}; rescale so that the denominator is |det|
        let factor = det.abs() / den;
        let mut adj = inv;
        for i in 0..adj.rows() {
            for j in 0..adj.cols() {
                adj[(i, j)] *= factor;
            }
        }
        Ok(Self { adj, sign: 1, scale: det.abs() })
    }

    fn coeffs(&self, x: &[Int]) -> Vec<Int> {
        self.adj.mul_vec(x).into_iter().map(|c| c * self.sign).collect()
    }

    fn in_cone(&self, x: &[Int]) -> bool {
        self.coeffs(x).iter().all(|&c| c >= 0)
    }
}

impl HilbertBasis {
    pub fn monoid_cone(&self) -> &Cone {
        &self.monoid_cone
    }

    pub fn elements(&self) -> &[LatticePoint] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// No element is the sum of two nonzero monoid elements.
    pub fn is_minimal(&self) -> bool {
        let bary = Barycentric::new(&self.monoid_cone.generator_matrix()).expect("simplicial");
        self.elements.iter().all(|h| {
            self.elements.iter().all(|y| y == h || !bary.in_cone(&(h - y)))
        })
    }

    /// Whether `x` is a nonnegative integer combination of the elements,
    /// decided by a bounded search along a positive grading.
    pub fn decomposes(&self, x: &LatticePoint, grading: &[Int]) -> Result<bool> {
        if self.elements.iter().any(|h| crate::arith::dot(grading, h) <= 0) {
            return Err(Error::InvalidArgument("grading must be positive on the basis".into()));
        }
        let bary = Barycentric::new(&self.monoid_cone.generator_matrix())?;
        let mut memo = BTreeMap::new();
        Ok(self.decomposes_rec(x, &bary, grading, &mut memo))
    }

    fn decomposes_rec(
        &self,
        x: &LatticePoint,
        bary: &Barycentric,
        grading: &[Int],
        memo: &mut BTreeMap<LatticePoint, bool>,
    ) -> bool {
        if x.is_zero() {
            return true;
        }
        if let Some(&v) = memo.get(x) {
            return v;
        }
        let ok = self.elements.iter().any(|h| {
            let rest = x - h;
            bary.in_cone(&rest) && self.decomposes_rec(&rest, bary, grading, memo)
        });
        memo.insert(x.clone(), ok);
        ok
    }

    /// All monoid elements of grade at most `bound` (grading positive on
    /// the cone generators), enumerated independently of the basis as
    /// parallelepiped points plus generator multiples.
    pub fn monoid_points_up_to(&self, grading: &[Int], bound: Int) -> Result<Vec<LatticePoint>> {
        let cone = &self.monoid_cone;
        let gens = cone.generators();
        let grades: Vec<Int> = gens.iter().map(|g| crate::arith::dot(grading, g)).collect();
        if grades.iter().any(|&d| d <= 0) {
            return Err(Error::InvalidArgument("grading must be positive on the cone".into()));
        }
        let mut out = Vec::new();
        for p in parallelepiped_points(cone)? {
            let base = crate::arith::dot(grading, &p);
            if base > bound {
                continue;
            }
            let mut stack = alloc::vec![(p, base, 0usize)];
            while let Some((q, deg, start)) = stack.pop() {
                out.push(q.clone());
                for i in start..gens.len() {
                    if deg + grades[i] <= bound {
                        stack.push((&q + &gens[i], deg + grades[i], i));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Points of the half-open fundamental parallelepiped of a full-dimensional
/// simplicial cone, including the origin.
pub fn parallelepiped_points(cone: &Cone) -> Result<Vec<LatticePoint>> {
    if !(cone.is_full_dimensional() && cone.is_simplicial()) {
        return Err(Error::Capacity("parallelepiped of a non-simplicial cone".into()));
    }
    let g = cone.generator_matrix();
    let r = g.rows();
    let bary = Barycentric::new(&g)?;
    if bary.scale > MAX_INDEX {
        return Err(Error::Capacity(format!("cone index {} too large", bary.scale)));
    }
    let smith = g.smith();
    let (u_inv, den) = smith.u.inverse()?;
    debug_assert_eq!(den, 1);
    let moduli = smith.diagonal.clone();
    let mut out = Vec::with_capacity(bary.scale as usize);
    let mut y = alloc::vec![0 as Int; r];
    loop {
        let x = u_inv.mul_vec(&y);
        // reduce into the parallelepiped
        let coeffs: Vec<Int> = bary.coeffs(&x).into_iter().map(|c| c.rem_euclid(bary.scale)).collect();
        let scaled = g.mul_vec(&coeffs);
        let p: Vec<Int> = scaled.iter().map(|s| s / bary.scale).collect();
        debug_assert!(scaled.iter().all(|s| s % bary.scale == 0));
        out.push(LatticePoint(p));
        // odometer over Z/d_1 x ... x Z/d_r
        let mut i = 0;
        loop {
            if i == r {
                out.sort();
                return Ok(out);
            }
            y[i] += 1;
            if y[i] < moduli[i] {
                break;
            }
            y[i] = 0;
            i += 1;
        }
    }
}

/// Hilbert basis with the default rank cap.
pub fn hilbert_basis(c: &Cone) -> Result<HilbertBasis> {
    hilbert_basis_with_cap(c, DEFAULT_MAX_RANK)
}

pub fn hilbert_basis_with_cap(c: &Cone, max_rank: usize) -> Result<HilbertBasis> {
    let r = c.lattice().rank();
    if r > max_rank {
        return Err(Error::Capacity(format!("rank {r} exceeds the Hilbert basis cap {max_rank}")));
    }
    if !c.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: c.dim(), rank: r });
    }
    if !c.is_simplicial() {
        return Err(Error::Capacity("Hilbert bases are computed for simplicial cones".into()));
    }
    let bary = Barycentric::new(&c.generator_matrix())?;
    let mut candidates: Vec<LatticePoint> = c.generators().to_vec();
    candidates.extend(parallelepiped_points(c)?.into_iter().filter(|p| !p.is_zero()));
    candidates.sort();
    candidates.dedup();
    let elements: Vec<LatticePoint> = candidates
        .iter()
        .filter(|x| {
            candidates.iter().all(|y| {
                if y == *x {
                    return true;
                }
                let diff = *x - y;
                !bary.in_cone(&diff)
            })
        })
        .cloned()
        .collect();
    Ok(HilbertBasis { monoid_cone: c.clone(), elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_core::lattice::ratvec;
    use crate::lattice_core::Lattice;
    use alloc::vec;

    #[test]
    fn orthant_is_free() {
        for d in 1..=4 {
            let c = Cone::new(Lattice::standard(d), (0..d).map(|i| LatticePoint::unit(d, i)).collect())
                .unwrap();
            let hb = hilbert_basis(&c).unwrap();
            assert_eq!(hb.len(), d);
        }
    }

    #[test]
    fn classic_two_dimensional_cone() {
        // cone ⟨(1,0),(1,3)⟩ ⊂ Z²: Hilbert basis (1,0),(1,1),(1,2),(1,3)
        let c = Cone::new(Lattice::standard(2), vec![LatticePoint(vec![1, 0]), LatticePoint(vec![1, 3])])
            .unwrap();
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(
            hb.elements(),
            &[
                LatticePoint(vec![1, 0]),
                LatticePoint(vec![1, 1]),
                LatticePoint(vec![1, 2]),
                LatticePoint(vec![1, 3])
            ]
        );
        assert!(hb.is_minimal());
        assert!(hb.decomposes(&LatticePoint(vec![5, 7]), &[1, 0]).unwrap());
    }

    #[test]
    fn a2_singularity_dual_monoid() {
        // n = 1 model: dual of the orthant in N = Z² + Z/3(1,-1)
        let n = Lattice::from_generators(&[ratvec(&[1, 0], 1), ratvec(&[0, 1], 1), ratvec(&[1, -1], 3)])
            .unwrap();
        let sigma = Cone::new(
            n.clone(),
            vec![n.from_reference(&ratvec(&[1, 0], 1)).unwrap(), n.from_reference(&ratvec(&[0, 1], 1)).unwrap()],
        )
        .unwrap();
        let hb = hilbert_basis(&sigma.dual_cone().unwrap()).unwrap();
        let m = n.dual();
        let mut refs: Vec<_> = hb.elements().iter().map(|h| m.to_reference(h)).collect();
        refs.sort();
        assert_eq!(refs, vec![ratvec(&[0, 3], 1), ratvec(&[1, 1], 1), ratvec(&[3, 0], 1)]);
    }

    #[test]
    fn rank_cap() {
        let c = Cone::new(Lattice::standard(3), (0..3).map(|i| LatticePoint::unit(3, i)).collect()).unwrap();
        assert!(matches!(hilbert_basis_with_cap(&c, 2), Err(Error::Capacity(_))));
    }
}
