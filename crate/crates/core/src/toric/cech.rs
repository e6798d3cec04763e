//! Line bundle cohomology on complete toric varieties from the combinatorial
//! Čech complex: the degree-`m` piece of `H^i(O(D))` is the reduced
//! cohomology `H̃^{i-1}` of the subcomplex of the fan spanned by the rays
//! `ρ` with `<m, v_ρ> < -a_ρ`.
//!
//! Instead of scanning a box of characters, the oracle groups characters by
//! the ray subset `V` they select. Only subsets whose subcomplex has nonzero
//! reduced cohomology contribute; for each of them the characters selecting
//! exactly `V` form a polytope whose lattice points are counted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Fan, TDivisor};
use crate::arith::{dot, Int};
use crate::cohomology::CohomologyVector;
use crate::lattice_core::dd::extreme_rays;
use crate::lattice_core::rank_i128;
use crate::{Error, Result};

/// Default rank cap for the oracle.
pub const CECH_MAX_RANK: usize = 5;

const MAX_RAYS: usize = 20;
const MAX_BOX: u64 = 50_000_000;

/// Precomputed reduced cohomology of the ray subcomplexes of one fan.
#[derive(Clone, Debug)]
pub struct CechOracle {
    fan: Fan,
    /// `(subset mask, h̃^{-1}, …, h̃^{r-1})` for subsets with nonzero
    /// reduced cohomology.
    contributing: Vec<(u32, Vec<u64>)>,
}

impl CechOracle {
    pub fn new(fan: &Fan) -> Result<Self> {
        Self::with_cap(fan, CECH_MAX_RANK)
    }

    pub fn with_cap(fan: &Fan, max_rank: usize) -> Result<Self> {
        if fan.rank() > max_rank {
            return Err(Error::Capacity(format!("rank {} exceeds the Čech oracle cap {max_rank}", fan.rank())));
        }
        if fan.num_rays() > MAX_RAYS {
            return Err(Error::Capacity(format!("{} rays exceed the Čech oracle cap {MAX_RAYS}", fan.num_rays())));
        }
        if !fan.is_complete() {
            return Err(Error::NotComplete("cohomology of a non-complete toric variety".into()));
        }
        if !fan.is_smooth() {
            return Err(Error::NotSmooth("the oracle expects a smooth fan".into()));
        }
        let faces = all_faces(fan);
        let subsets: Vec<u32> = (0..(1u32 << fan.num_rays())).collect();
        let compute = |&v: &u32| -> Result<Option<(u32, Vec<u64>)>> {
            let h = reduced_cohomology(&faces, v, fan.rank())?;
            Ok(h.iter().any(|&x| x != 0).then_some((v, h)))
        };
        #[cfg(feature = "parallel")]
        let found: Vec<Result<Option<(u32, Vec<u64>)>>> = {
            use rayon::prelude::*;
            subsets.par_iter().map(compute).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let found: Vec<Result<Option<(u32, Vec<u64>)>>> = subsets.iter().map(compute).collect();
        let mut contributing = Vec::new();
        for f in found {
            if let Some(x) = f? {
                contributing.push(x);
            }
        }
        Ok(Self { fan: fan.clone(), contributing })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// `h^i(X, O(D))` for `i = 0..=rank`.
    pub fn cohomology(&self, d: &TDivisor) -> Result<CohomologyVector> {
        if d.len() != self.fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: self.fan.num_rays(), got: d.len() });
        }
        let r = self.fan.rank();
        let mut h = vec![0u64; r + 1];
        for (mask, reduced) in &self.contributing {
            let count = count_region(&self.fan, d, *mask)?;
            if count == 0 {
                continue;
            }
            // reduced[k] is h̃^{k-1}, feeding H^k
            for (i, &x) in reduced.iter().enumerate() {
                h[i] += x * count;
            }
        }
        Ok(CohomologyVector::exact(h))
    }
}

/// `h^*(X, O(D))` for a complete smooth fan.
pub fn line_bundle_cohomology(fan: &Fan, d: &TDivisor) -> Result<CohomologyVector> {
    CechOracle::new(fan)?.cohomology(d)
}

fn all_faces(fan: &Fan) -> Vec<u32> {
    let mut faces: Vec<u32> = Vec::new();
    for c in fan.max_cones() {
        let k = c.len();
        for sub in 0u32..(1 << k) {
            let mask = (0..k).filter(|j| sub & (1 << j) != 0).fold(0u32, |m, j| m | (1 << c[j]));
            faces.push(mask);
        }
    }
    faces.sort_unstable();
    faces.dedup();
    faces
}

/// Reduced cohomology `h̃^{-1}, …, h̃^{r-1}` of the faces inside `v`.
fn reduced_cohomology(faces: &[u32], v: u32, r: usize) -> Result<Vec<u64>> {
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for &f in faces {
        if f & !v == 0 {
            by_size[f.count_ones() as usize].push(f);
        }
    }
    // rk[s] = rank of the boundary from faces of size s to size s - 1
    let mut rk = vec![0usize; r + 2];
    for s in 1..=r {
        let (upper, lower) = (&by_size[s], &by_size[s - 1]);
        if upper.is_empty() || lower.is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![0i128; upper.len() * lower.len()];
        for (row, &f) in upper.iter().enumerate() {
            let mut sign = 1i128;
            for bit in 0..32 {
                if f & (1 << bit) != 0 {
                    let col = index[&(f & !(1 << bit))];
                    m[row * lower.len() + col] = sign;
                    sign = -sign;
                }
            }
        }
        rk[s] = rank_i128(upper.len(), lower.len(), m)?;
    }
    Ok((0..=r)
        .map(|s| (by_size[s].len() - rk[s] - rk[s + 1]) as u64)
        .collect())
}

/// Number of characters `m` selecting exactly the ray subset `mask`.
fn count_region(fan: &Fan, d: &TDivisor, mask: u32) -> Result<u64> {
    let r = fan.rank();
    let rows: Vec<(Vec<Int>, Int)> = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let a = d.coefficient(i);
            if mask & (1 << i) != 0 {
                // <m, v> <= -a - 1
                (v.iter().map(|x| -x).collect(), -a - 1)
            } else {
                // <m, v> >= -a
                (v.to_vec(), a)
            }
        })
        .collect();
    let mut hom: Vec<Vec<Int>> = rows
        .iter()
        .map(|(w, c)| {
            let mut h = w.clone();
            h.push(*c);
            h
        })
        .collect();
    let mut t_row = vec![0; r + 1];
    t_row[r] = 1;
    hom.push(t_row);
    let rays = extreme_rays(&hom, r + 1)?;
    let vertices: Vec<&Vec<Int>> = rays.iter().filter(|x| x[r] > 0).collect();
    if vertices.is_empty() {
        return Ok(0);
    }
    if rays.iter().any(|x| x[r] == 0) {
        return Err(Error::Internal("unbounded region with nonzero local cohomology".into()));
    }
    let mut lo = vec![Int::MAX; r];
    let mut hi = vec![Int::MIN; r];
    for x in &vertices {
        let t = x[r];
        for j in 0..r {
            lo[j] = lo[j].min(num_integer::Integer::div_ceil(&x[j], &t));
            hi[j] = hi[j].max(num_integer::Integer::div_floor(&x[j], &t));
        }
    }
    if (0..r).any(|j| lo[j] > hi[j]) {
        return Ok(0);
    }
    let volume: u64 = (0..r).map(|j| (hi[j] - lo[j] + 1) as u64).product();
    if volume > MAX_BOX {
        return Err(Error::Capacity(format!("{volume} candidate characters")));
    }
    let mut m = lo.clone();
    let mut count = 0;
    loop {
        if rows.iter().all(|(w, c)| dot(w, &m) + c >= 0) {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == r {
                return Ok(count);
            }
            m[j] += 1;
            if m[j] <= hi[j] {
                break;
            }
            m[j] = lo[j];
            j += 1;
        }
    }
}
