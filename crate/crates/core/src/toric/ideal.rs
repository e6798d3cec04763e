use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Fan;
use crate::arith::{dot, Int, Rational};
use crate::lattice_core::dd::extreme_rays;
use crate::lattice_core::{Cone, IntMatrix, LatticePoint};
use crate::{Error, Result};

/// A monomial ideal of `C[M ∩ σ∨]`, given by exponent vectors in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient_dual_cone: Cone,
    generators: Vec<LatticePoint>,
}

impl MonomialIdeal {
    pub fn new(ambient_dual_cone: Cone, generators: Vec<LatticePoint>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Degenerate("ideal with no generators".into()));
        }
        for g in &generators {
            if !ambient_dual_cone.contains(g)? {
                return Err(Error::InvalidArgument("generator outside the dual cone".into()));
            }
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        Ok(Self { ambient_dual_cone, generators })
    }

    pub fn ambient_dual_cone(&self) -> &Cone {
        &self.ambient_dual_cone
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_zero())
    }
}

/// Order of vanishing of the ideal along the divisor of the ray `v`:
/// `min_u <u, v>` over the generators.
pub fn vanishing_order(ideal: &MonomialIdeal, ray: &LatticePoint) -> Result<Int> {
    let r = ideal.ambient_dual_cone.lattice().rank();
    if ray.rank() != r {
        return Err(Error::DimensionMismatch { expected: r, got: ray.rank() });
    }
    Ok(ideal.generators.iter().map(|u| dot(u, ray)).min().expect("nonempty ideal"))
}

/// Same as [`vanishing_order`] for a ray given in reference coordinates.
pub fn vanishing_order_at(ideal: &MonomialIdeal, reference: &[Rational]) -> Result<Int> {
    let n = ideal.ambient_dual_cone.lattice().dual();
    let ray = n.from_reference(reference).map_err(|_| {
        Error::Internal("pairing with the ideal is not integral: ray outside N".into())
    })?;
    vanishing_order(ideal, &ray)
}

/// The normalized blow-up of `ideal` over the affine toric variety of
/// `ambient`: the normal fan of `conv(generators) + σ∨`.
///
/// For each generator `a` the normal cone `{w ∈ σ : <b - a, w> >= 0 ∀ b}` is
/// computed by double description; `a` is a vertex iff that cone is
/// full-dimensional. The rays of `ambient` come first, the new rays follow
/// in lexicographic order of their reference coordinates.
pub fn normal_fan_blowup(ideal: &MonomialIdeal, ambient: &Cone) -> Result<Fan> {
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal has no blow-up".into()));
    }
    let lattice = ambient.lattice();
    if ideal.ambient_dual_cone.lattice() != &lattice.dual() {
        return Err(Error::InvalidArgument("ideal and cone live over different lattices".into()));
    }
    if !ambient.is_full_dimensional() || !ambient.is_pointed() {
        return Err(Error::NotFullDimensional { dim: ambient.dim(), rank: lattice.rank() });
    }
    let r = lattice.rank();
    let walls: Vec<Vec<Int>> = ambient.facet_normals()?;
    let mut normal_cones: Vec<Vec<Vec<Int>>> = Vec::new();
    for a in &ideal.generators {
        let mut ineqs = walls.clone();
        ineqs.extend(ideal.generators.iter().filter(|b| *b != a).map(|b| (b - a).0));
        let rays = extreme_rays(&ineqs, r)?;
        if rays.len() < r || IntMatrix::from_rows(&rays, r)?.rank() < r {
            continue;
        }
        if rays.len() > r {
            return Err(Error::Capacity("normal fan with a non-simplicial cone".into()));
        }
        normal_cones.push(rays);
    }
    let old: Vec<Vec<Int>> = ambient.generators().iter().map(|g| g.0.clone()).collect();
    let all: BTreeSet<Vec<Int>> = normal_cones.iter().flatten().cloned().collect();
    let mut new: Vec<Vec<Int>> = all.iter().filter(|v| !old.contains(v)).cloned().collect();
    new.sort_by_key(|v| lattice.to_reference(v));
    let rays: Vec<Vec<Int>> = old.into_iter().filter(|v| all.contains(v)).chain(new).collect();
    let mut cones: Vec<Vec<usize>> = normal_cones
        .iter()
        .map(|c| {
            let mut idx: Vec<usize> = c.iter().map(|v| rays.iter().position(|w| w == v).expect("collected")).collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    cones.sort();
    Fan::new(lattice.clone(), rays.into_iter().map(LatticePoint).collect(), cones)
}

/// Discrepancy `<m_K, v> - 1` of the divisor of `ray` over the affine toric
/// variety of the simplicial Gorenstein cone `ambient`, where `m_K` takes the
/// value 1 on every ray of `ambient`.
pub fn discrepancy(fan: &Fan, ambient: &Cone, ray: &LatticePoint) -> Result<Int> {
    if !fan.support_contains(ray)? {
        return Err(Error::InvalidArgument("ray outside the support of the fan".into()));
    }
    let m_k = canonical_character(ambient)?;
    Ok(dot(&m_k, ray) - 1)
}

/// The character `m_K ∈ M` equal to 1 on the rays of a full-dimensional
/// simplicial cone; an error if the cone is not Gorenstein.
pub fn canonical_character(ambient: &Cone) -> Result<Vec<Int>> {
    if !(ambient.is_full_dimensional() && ambient.is_simplicial()) {
        return Err(Error::Capacity("canonical character of a non-simplicial cone".into()));
    }
    let gt = ambient.generator_matrix().transpose();
    let ones = alloc::vec![1; ambient.dim()];
    let sol = gt.solve(&ones)?;
    crate::arith::integral(&sol)
        .map_err(|_| Error::InvalidArgument("cone is not Gorenstein: K is not Cartier".into()))
}
