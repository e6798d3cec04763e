use alloc::format;
use alloc::vec::Vec;

use super::dd::extreme_rays;
use super::{IntMatrix, Lattice, LatticePoint};
use crate::arith::{dot, Int, Rational};
use crate::{Error, Result};

/// A rational polyhedral cone in a lattice, given by primitive irredundant
/// generators (integral-basis coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    lattice: Lattice,
    generators: Vec<LatticePoint>,
    dim: usize,
    pointed: bool,
}

impl Cone {
    /// Builds a cone from arbitrary nonzero generators. Generators are made
    /// primitive, duplicates dropped and, for full-dimensional cones, the
    /// non-extreme ones removed.
    ///
    /// Lower-dimensional cones must be simplicial; non-pointed
    /// full-dimensional cones are rejected.
    pub fn new(lattice: Lattice, generators: Vec<LatticePoint>) -> Result<Self> {
        let r = lattice.rank();
        if generators.is_empty() {
            return Err(Error::Degenerate("cone with no generators".into()));
        }
        let mut gens: Vec<LatticePoint> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.rank() != r {
                return Err(Error::DimensionMismatch { expected: r, got: g.rank() });
            }
            if g.is_zero() {
                return Err(Error::Degenerate("zero generator".into()));
            }
            let g = g.primitive();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        let rank = IntMatrix::from_rows(&gens, r)?.rank();
        if rank == gens.len() {
            return Ok(Self { lattice, generators: gens, dim: rank, pointed: true });
        }
        if rank < r {
            return Err(Error::Capacity(format!(
                "non-simplicial cone of dimension {rank} < {r} is not supported"
            )));
        }
        let facets = extreme_rays(&gens.iter().map(|g| g.0.clone()).collect::<Vec<_>>(), r)?;
        if facets.is_empty() || IntMatrix::from_rows(&facets, r)?.rank() < r {
            return Err(Error::NotPointed);
        }
        gens.retain(|g| {
            let tight: Vec<&Vec<Int>> = facets.iter().filter(|f| dot(f, g) == 0).collect();
            !tight.is_empty() && IntMatrix::from_rows(&tight, r).map(|m| m.rank()) == Ok(r - 1)
        });
        Ok(Self { lattice, generators: gens, dim: r, pointed: true })
    }

    /// The zero cone `{0}`, the minimal face of every pointed cone.
    pub fn origin(lattice: Lattice) -> Self {
        Self { lattice, generators: Vec::new(), dim: 0, pointed: true }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.lattice.rank()
    }

    pub fn is_simplicial(&self) -> bool {
        self.generators.len() == self.dim
    }

    /// Generators as the columns of a matrix.
    pub fn generator_matrix(&self) -> IntMatrix {
        IntMatrix::from_cols(&self.generators, self.lattice.rank()).expect("consistent ranks")
    }

    /// Inward facet normals in the dual lattice (integral coordinates).
    /// Only defined for full-dimensional cones.
    pub fn facet_normals(&self) -> Result<Vec<Vec<Int>>> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim, rank: self.lattice.rank() });
        }
        extreme_rays(
            &self.generators.iter().map(|g| g.0.clone()).collect::<Vec<_>>(),
            self.lattice.rank(),
        )
    }

    /// Whether a point (integral or rational coordinates scaled to integers)
    /// lies in the cone.
    pub fn contains(&self, x: &[Int]) -> Result<bool> {
        if x.iter().all(|&c| c == 0) {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        if self.is_full_dimensional() {
            return Ok(self.facet_normals()?.iter().all(|f| dot(f, x) >= 0));
        }
        // simplicial, lower-dimensional: solve the normal equations
        let g = self.generator_matrix();
        let gram = g.transpose().mul(&g);
        let rhs = g.transpose().mul_vec(x);
        let lambda = gram.solve(&rhs)?;
        if lambda.iter().any(|l| *l < Rational::from_integer(0)) {
            return Ok(false);
        }
        let r = self.lattice.rank();
        Ok((0..r).all(|i| {
            let s: Rational =
                (0..lambda.len()).map(|j| lambda[j] * g[(i, j)]).sum();
            s == Rational::from_integer(x[i])
        }))
    }

    /// Dual cone in the dual lattice `M = Hom(N, Z)`.
    pub fn dual_cone(&self) -> Result<Cone> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim, rank: self.lattice.rank() });
        }
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let facets = self.facet_normals()?;
        Cone::new(self.lattice.dual(), facets.into_iter().map(LatticePoint).collect())
    }

    /// Whether the generators extend to a basis of the lattice, decided by
    /// the invariant factors of the generator matrix.
    pub fn is_regular(&self) -> bool {
        if !self.is_simplicial() {
            return false;
        }
        if self.generators.is_empty() {
            return true;
        }
        self.generator_matrix().smith().diagonal.iter().all(|&d| d == 1)
    }

    /// Multiplicity `|det|` of a full-dimensional simplicial cone (index of
    /// the generated sublattice).
    pub fn multiplicity(&self) -> Result<Int> {
        if !(self.is_full_dimensional() && self.is_simplicial()) {
            return Err(Error::Capacity("multiplicity needs a full-dimensional simplicial cone".into()));
        }
        Ok(self.generator_matrix().det().abs())
    }

    /// All faces of a simplicial cone, one per subset of generators, ordered
    /// by subset bitmask (so the origin comes first and the cone itself last).
    pub fn faces(&self) -> Result<Vec<Cone>> {
        if !self.is_simplicial() {
            return Err(Error::Capacity("faces are enumerated for simplicial cones only".into()));
        }
        let d = self.generators.len();
        if d >= 32 {
            return Err(Error::Capacity(format!("{d} generators")));
        }
        Ok((0u32..(1 << d))
            .map(|mask| {
                let gens: Vec<LatticePoint> = (0..d)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.generators[i].clone())
                    .collect();
                let dim = gens.len();
                Cone { lattice: self.lattice.clone(), generators: gens, dim, pointed: true }
            })
            .collect())
    }

    /// Same cone with generators sorted, for order-insensitive comparison.
    pub fn normalized(&self) -> Cone {
        let mut c = self.clone();
        c.generators.sort();
        c
    }
}

/// Projection `N -> N / span(vs)` onto a free quotient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    matrix: IntMatrix,
}

impl Projection {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, p: &[Int]) -> LatticePoint {
        LatticePoint(self.matrix.mul_vec(p))
    }
}

/// Quotient of `l` by the primitive vector `v`: a free lattice of rank
/// `rank - 1` (given the standard embedding) and the projection onto it.
pub fn quotient_lattice(l: &Lattice, v: &LatticePoint) -> Result<(Lattice, Projection)> {
    quotient_by(l, core::slice::from_ref(v))
}

/// Quotient by the sublattice spanned by `vs`, which must be saturated (the
/// vectors extend to a basis) so that the quotient is torsion-free.
pub fn quotient_by(l: &Lattice, vs: &[LatticePoint]) -> Result<(Lattice, Projection)> {
    let r = l.rank();
    let k = vs.len();
    if k == 0 || k >= r {
        return Err(Error::InvalidArgument(format!("cannot quotient rank {r} by {k} vectors")));
    }
    if vs.len() == 1 && !vs[0].is_primitive() {
        return Err(Error::NotPrimitive(vs[0].content()));
    }
    let a = IntMatrix::from_cols(vs, r)?;
    let smith = a.smith();
    if smith.diagonal.iter().any(|&d| d != 1) {
        return Err(Error::NotPrimitive(smith.diagonal.iter().product()));
    }
    let rows: Vec<Vec<Int>> = (k..r).map(|i| smith.u.row(i).to_vec()).collect();
    let matrix = IntMatrix::from_rows(&rows, r)?;
    Ok((Lattice::standard(r - k), Projection { matrix }))
}
