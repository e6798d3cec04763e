use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{dot, Int};
use crate::lattice_core::dd::extreme_rays;
use crate::lattice_core::{quotient_by, Cone, IntMatrix, Lattice, LatticePoint, Projection};
use crate::{Error, Result};

/// A simplicial fan: primitive rays plus maximal cones given as sorted sets
/// of ray indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice: Lattice,
    rays: Vec<LatticePoint>,
    max_cones: Vec<Vec<usize>>,
}

/// A codimension-one cone together with the maximal cones containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub rays: Vec<usize>,
    pub cones: Vec<usize>,
}

/// The star of a cone: a fan in the quotient lattice plus the original index
/// of each of its rays.
#[derive(Clone, Debug)]
pub struct StarFan {
    pub fan: Fan,
    pub source_rays: Vec<usize>,
    pub projection: Projection,
}

impl Fan {
    /// Validates and builds a fan. Every maximal cone must be simplicial, no
    /// cone may contain another, every ray must lie in a cone, and any two
    /// maximal cones must meet in a common face.
    pub fn new(lattice: Lattice, rays: Vec<LatticePoint>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        let r = lattice.rank();
        for (i, v) in rays.iter().enumerate() {
            if v.rank() != r {
                return Err(Error::DimensionMismatch { expected: r, got: v.rank() });
            }
            if v.is_zero() {
                return Err(Error::InvalidFan(format!("ray {i} is zero")));
            }
            if !v.is_primitive() {
                return Err(Error::NotPrimitive(v.content()));
            }
        }
        let distinct: BTreeSet<&LatticePoint> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::InvalidFan("duplicate rays".into()));
        }
        if max_cones.is_empty() {
            return Err(Error::InvalidFan("no maximal cones".into()));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if c.is_empty() {
                return Err(Error::InvalidFan("empty maximal cone".into()));
            }
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("ray index {bad} out of range")));
            }
            let m = IntMatrix::from_rows(&c.iter().map(|&i| &rays[i]).collect::<Vec<_>>(), r)?;
            if m.rank() != c.len() {
                return Err(Error::InvalidFan(format!("cone {c:?} is not simplicial")));
            }
            cones.push(c);
        }
        let mut used = vec![false; rays.len()];
        cones.iter().flatten().for_each(|&i| used[i] = true);
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidFan(format!("ray {i} lies in no cone")));
        }
        for (i, a) in cones.iter().enumerate() {
            for (j, b) in cones.iter().enumerate() {
                if i != j && is_subset(a, b) {
                    return Err(Error::InvalidFan(format!("cone {a:?} is contained in {b:?}")));
                }
            }
        }
        let fan = Self { lattice, rays, max_cones: cones };
        fan.check_intersections()?;
        Ok(fan)
    }

    fn check_intersections(&self) -> Result<()> {
        let r = self.rank();
        let ineqs: Vec<Vec<Vec<Int>>> = self
            .max_cones
            .iter()
            .map(|c| cone_inequalities(&c.iter().map(|&i| self.rays[i].coords()).collect::<Vec<_>>(), r))
            .collect::<Result<_>>()?;
        for i in 0..self.max_cones.len() {
            for j in i + 1..self.max_cones.len() {
                let mut sys = ineqs[i].clone();
                sys.extend(ineqs[j].iter().cloned());
                let common: Vec<&LatticePoint> = self.max_cones[i]
                    .iter()
                    .filter(|k| self.max_cones[j].contains(k))
                    .map(|&k| &self.rays[k])
                    .collect();
                for ray in extreme_rays(&sys, r)? {
                    if !common.iter().any(|c| c.coords() == ray.as_slice()) {
                        return Err(Error::InvalidFan(format!(
                            "cones {:?} and {:?} overlap outside a common face",
                            self.max_cones[i], self.max_cones[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &LatticePoint {
        &self.rays[i]
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn ray_index(&self, v: &LatticePoint) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }

    /// The maximal cone `i` as a [`Cone`].
    pub fn cone(&self, i: usize) -> Cone {
        Cone::new(self.lattice.clone(), self.max_cones[i].iter().map(|&k| self.rays[k].clone()).collect())
            .expect("validated cone")
    }

    /// Whether the ray set spans a cone of the fan.
    pub fn is_cone(&self, rays: &[usize]) -> bool {
        self.max_cones.iter().any(|c| rays.iter().all(|r| c.contains(r)))
    }

    /// Indices of the maximal cones containing all the given rays.
    pub fn cones_containing(&self, rays: &[usize]) -> Vec<usize> {
        (0..self.max_cones.len())
            .filter(|&i| rays.iter().all(|r| self.max_cones[i].contains(r)))
            .collect()
    }

    /// Number of maximal cones containing each ray.
    pub fn ray_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.rays.len()];
        self.max_cones.iter().flatten().for_each(|&i| d[i] += 1);
        d
    }

    pub fn is_smooth(&self) -> bool {
        (0..self.max_cones.len()).all(|i| self.cone(i).is_regular())
    }

    pub fn is_pure_full_dimensional(&self) -> bool {
        self.max_cones.iter().all(|c| c.len() == self.rank())
    }

    /// Codimension-one faces of the full-dimensional maximal cones.
    pub fn walls(&self) -> Vec<Wall> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.max_cones.iter().enumerate() {
            if c.len() != self.rank() {
                continue;
            }
            for skip in 0..c.len() {
                let face: Vec<usize> = c.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &x)| x).collect();
                map.entry(face).or_default().push(ci);
            }
        }
        map.into_iter().map(|(rays, cones)| Wall { rays, cones }).collect()
    }

    /// Complete iff all maximal cones are full-dimensional and every wall
    /// lies in exactly two of them.
    pub fn is_complete(&self) -> bool {
        self.is_pure_full_dimensional() && self.walls().iter().all(|w| w.cones.len() == 2)
    }

    /// Whether the support of the fan is exactly `c`: every maximal cone is
    /// full-dimensional and inside `c`, interior walls are shared by two
    /// cones and walls met by a single cone lie on a facet of `c`.
    pub fn support_equals(&self, c: &Cone) -> Result<bool> {
        if c.lattice() != &self.lattice {
            return Err(Error::InvalidArgument("cone lives in a different lattice".into()));
        }
        if !self.is_pure_full_dimensional() {
            return Ok(false);
        }
        for v in &self.rays {
            if !c.contains(v)? {
                return Ok(false);
            }
        }
        let facets = c.facet_normals()?;
        for w in self.walls() {
            match w.cones.len() {
                2 => {}
                1 => {
                    let on_boundary = facets
                        .iter()
                        .any(|f| w.rays.iter().all(|&i| dot(f, &self.rays[i]) == 0));
                    if !on_boundary {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Whether some maximal cone contains the point.
    pub fn support_contains(&self, x: &[Int]) -> Result<bool> {
        for i in 0..self.max_cones.len() {
            if self.cone(i).contains(x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether the graph on maximal cones, with edges between cones sharing
    /// a wall, is connected.
    pub fn is_connected(&self) -> bool {
        let k = self.max_cones.len();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if !seen[j] {
                    let shared = self.max_cones[i].iter().filter(|x| self.max_cones[j].contains(x)).count();
                    if shared + 1 == self.max_cones[i].len().max(self.max_cones[j].len()) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Star of the ray `i`: the fan of the orbit closure `V(ray)`.
    pub fn star(&self, i: usize) -> Result<Fan> {
        Ok(self.star_of_cone(&[i])?.fan)
    }

    /// Star of the cone spanned by `rays`, in `N / span(rays)`.
    pub fn star_of_cone(&self, rays: &[usize]) -> Result<StarFan> {
        if let Some(&bad) = rays.iter().find(|&&i| i >= self.rays.len()) {
            return Err(Error::InvalidArgument(format!("ray index {bad} out of range")));
        }
        let containing = self.cones_containing(rays);
        if containing.is_empty() {
            return Err(Error::InvalidArgument(format!("{rays:?} is not a cone of the fan")));
        }
        let vs: Vec<LatticePoint> = rays.iter().map(|&i| self.rays[i].clone()).collect();
        let (lattice, projection) = quotient_by(&self.lattice, &vs)?;
        let mut source_rays: Vec<usize> = containing
            .iter()
            .flat_map(|&c| self.max_cones[c].iter().copied())
            .filter(|i| !rays.contains(i))
            .collect();
        source_rays.sort_unstable();
        source_rays.dedup();
        let images: Vec<LatticePoint> = source_rays
            .iter()
            .map(|&i| projection.apply(&self.rays[i]).primitive())
            .collect();
        let cones: Vec<Vec<usize>> = containing
            .iter()
            .map(|&c| {
                self.max_cones[c]
                    .iter()
                    .filter(|i| !rays.contains(i))
                    .map(|i| source_rays.binary_search(i).expect("collected"))
                    .collect()
            })
            .collect();
        let fan = Fan::new(lattice, images, cones)?;
        Ok(StarFan { fan, source_rays, projection })
    }

    /// Ray permutation `p` with `other.rays[p[i]] == self.rays[i]` that also
    /// matches the maximal cones, if the two fans are equal up to relabeling.
    pub fn relabeling_to(&self, other: &Fan) -> Option<Vec<usize>> {
        if self.lattice != other.lattice
            || self.rays.len() != other.rays.len()
            || self.max_cones.len() != other.max_cones.len()
        {
            return None;
        }
        let perm: Vec<usize> = self.rays.iter().map(|v| other.ray_index(v)).collect::<Option<_>>()?;
        let theirs: BTreeSet<&Vec<usize>> = other.max_cones.iter().collect();
        self.max_cones
            .iter()
            .all(|c| {
                let mut image: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
                image.sort_unstable();
                theirs.contains(&image)
            })
            .then_some(perm)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.contains(x))
}

/// Inequalities `<h, x> >= 0` cutting out the simplicial cone spanned by
/// `rays` (equalities appear as opposite pairs).
pub(crate) fn cone_inequalities(rays: &[&[Int]], r: usize) -> Result<Vec<Vec<Int>>> {
    let k = rays.len();
    let mut cols: Vec<Vec<Int>> = rays.iter().map(|v| v.to_vec()).collect();
    if k < r {
        if k == 0 {
            cols.extend((0..r).map(|i| LatticePoint::unit(r, i).0));
        } else {
            // complete with a basis of the orthogonal complement
            let gt = IntMatrix::from_rows(rays, r)?;
            let smith = gt.smith();
            cols.extend((k..r).map(|j| smith.v.col(j)));
        }
    }
    let h = IntMatrix::from_cols(&cols, r)?;
    let (inv, _) = h.inverse()?;
    let mut out = Vec::with_capacity(k + 2 * (r - k));
    for i in 0..r {
        let row = inv.row(i).to_vec();
        if i >= k {
            out.push(row.iter().map(|x| -x).collect());
        }
        out.push(row);
    }
    Ok(out)
}
