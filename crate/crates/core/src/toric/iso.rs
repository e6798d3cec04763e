use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Fan;
use crate::arith::Int;
use crate::lattice_core::{IntMatrix, LatticePoint};
use crate::{Error, Result};

/// Default cap on the number of candidate ray assignments tried.
pub const MAX_CANDIDATES: u64 = 1_000_000;

/// A lattice isomorphism carrying one fan onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanIsomorphism {
    /// Integral coordinates in the target are `matrix * source coordinates`.
    pub matrix: IntMatrix,
    /// `ray_map[i]` is the target ray of source ray `i`.
    pub ray_map: Vec<usize>,
}

impl FanIsomorphism {
    /// Re-checks the witness: unimodular, rays onto rays, cones onto cones.
    pub fn verify(&self, a: &Fan, b: &Fan) -> bool {
        self.matrix.det().abs() == 1 && carries(&self.matrix, a, b).as_ref() == Some(&self.ray_map)
    }
}

/// A lattice isomorphism mapping rays to rays and maximal cones to maximal
/// cones, or `None` if there is none.
///
/// Any isomorphism sends the first full-dimensional maximal cone of `a` onto
/// some maximal cone of `b` with some ordering of its rays; every such
/// assignment (pruned by the number of maximal cones through each ray)
/// determines a unique linear map, which is then checked.
pub fn fan_isomorphic(a: &Fan, b: &Fan) -> Result<Option<FanIsomorphism>> {
    fan_isomorphic_with_cap(a, b, MAX_CANDIDATES)
}

pub fn fan_isomorphic_with_cap(a: &Fan, b: &Fan, cap: u64) -> Result<Option<FanIsomorphism>> {
    let r = a.rank();
    if r != b.rank() || a.num_rays() != b.num_rays() || a.max_cones().len() != b.max_cones().len() {
        return Ok(None);
    }
    let (da, db) = (a.ray_degrees(), b.ray_degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let Some(anchor) = a.max_cones().iter().find(|c| c.len() == r) else {
        return Err(Error::Capacity("isomorphism search needs a full-dimensional cone".into()));
    };
    let s = IntMatrix::from_cols(&anchor.iter().map(|&i| a.ray(i)).collect::<Vec<_>>(), r)?;
    let (s_inv, s_den) = s.inverse()?;
    let mut tried = 0u64;
    for target in b.max_cones().iter().filter(|c| c.len() == r) {
        let mut used = vec![false; r];
        let mut assignment = Vec::with_capacity(r);
        if let Some(found) = assign(a, b, anchor, target, &da, &db, &s_inv, s_den, &mut used, &mut assignment, &mut tried, cap)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &Fan,
    b: &Fan,
    anchor: &[usize],
    target: &[usize],
    da: &[usize],
    db: &[usize],
    s_inv: &IntMatrix,
    s_den: Int,
    used: &mut [bool],
    assignment: &mut Vec<usize>,
    tried: &mut u64,
    cap: u64,
) -> Result<Option<FanIsomorphism>> {
    let k = assignment.len();
    if k == anchor.len() {
        *tried += 1;
        if *tried > cap {
            return Err(Error::Capacity(format!("more than {cap} candidate isomorphisms")));
        }
        let r = a.rank();
        let t = IntMatrix::from_cols(&assignment.iter().map(|&j| b.ray(j)).collect::<Vec<_>>(), r)?;
        let prod = t.mul(s_inv);
        let mut m = IntMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                if prod[(i, j)] % s_den != 0 {
                    return Ok(None);
                }
                m[(i, j)] = prod[(i, j)] / s_den;
            }
        }
        if m.det().abs() != 1 {
            return Ok(None);
        }
        return Ok(carries(&m, a, b).map(|ray_map| FanIsomorphism { matrix: m, ray_map }));
    }
    for slot in 0..target.len() {
        if used[slot] || da[anchor[k]] != db[target[slot]] {
            continue;
        }
        used[slot] = true;
        assignment.push(target[slot]);
        let found = assign(a, b, anchor, target, da, db, s_inv, s_den, used, assignment, tried, cap)?;
        assignment.pop();
        used[slot] = false;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// The ray bijection induced by `m` if it carries the fan `a` onto `b`.
fn carries(m: &IntMatrix, a: &Fan, b: &Fan) -> Option<Vec<usize>> {
    let index: BTreeMap<&LatticePoint, usize> = b.rays().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut ray_map = Vec::with_capacity(a.num_rays());
    for v in a.rays() {
        let image = LatticePoint(m.mul_vec(v));
        ray_map.push(*index.get(&image)?);
    }
    let distinct: BTreeSet<usize> = ray_map.iter().copied().collect();
    if distinct.len() != ray_map.len() {
        return None;
    }
    let cones: BTreeSet<&Vec<usize>> = b.max_cones().iter().collect();
    a.max_cones()
        .iter()
        .all(|c| {
            let mut image: Vec<usize> = c.iter().map(|&i| ray_map[i]).collect();
            image.sort_unstable();
            cones.contains(&image)
        })
        .then_some(ray_map)
}
