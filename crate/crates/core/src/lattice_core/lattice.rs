use alloc::vec::Vec;
use core::ops::{Add, Deref, Neg, Sub};

use num_integer::Integer;

use super::IntMatrix;
use crate::arith::{common_denominator, content, integral, Int, Rational};
use crate::{Error, Result};

/// A point of a lattice, given by its coordinates in the lattice's integral
/// basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<Int>);

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(alloc::vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = 1;
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn content(&self) -> Int {
        content(&self.0)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// The primitive vector on the same ray. Panics on the zero vector.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        assert!(g != 0, "primitive vector of zero");
        Self(self.0.iter().map(|x| x / g).collect())
    }

    /// Canonical pairing with a point of the dual lattice (dual bases).
    pub fn pair(&self, dual: &LatticePoint) -> Int {
        crate::arith::dot(&self.0, &dual.0)
    }

    pub fn scaled(&self, k: Int) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }
}

impl Deref for LatticePoint {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl AsRef<[Int]> for LatticePoint {
    fn as_ref(&self) -> &[Int] {
        &self.0
    }
}

impl From<Vec<Int>> for LatticePoint {
    fn from(v: Vec<Int>) -> Self {
        Self(v)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

/// A full-rank lattice in `Q^r`, stored through an integral basis expressed
/// in reference coordinates.
///
/// The basis vectors are the columns of `basis / denom`. The dual lattice
/// uses the dual basis, so pairing integral coordinates of a lattice point
/// with integral coordinates of a dual point is a plain dot product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: IntMatrix,
    denom: Int,
    inverse: IntMatrix,
    inverse_denom: Int,
}

impl Lattice {
    /// `Z^r` with the standard basis.
    pub fn standard(rank: usize) -> Self {
        Self::from_basis(IntMatrix::identity(rank), 1).expect("identity basis")
    }

    /// Lattice whose basis vectors are the columns of `basis / denom`.
    pub fn from_basis(basis: IntMatrix, denom: Int) -> Result<Self> {
        if !basis.is_square() {
            return Err(Error::DimensionMismatch { expected: basis.rows(), got: basis.cols() });
        }
        if basis.rows() == 0 {
            return Err(Error::Degenerate("lattice of rank 0".into()));
        }
        if denom <= 0 {
            return Err(Error::InvalidArgument("denominator must be positive".into()));
        }
        let (binv, bden) = basis.inverse()?;
        let (inverse, inverse_denom) = reduce(&scale(&binv, denom), bden);
        let (basis, denom) = reduce(&basis, denom);
        Ok(Self { basis, denom, inverse, inverse_denom })
    }

    /// The lattice generated by the given reference-coordinate vectors, with
    /// an integral basis taken from the Hermite normal form of the generators.
    pub fn from_generators(gens: &[Vec<Rational>]) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::Degenerate("no generators".into()));
        };
        let r = first.len();
        let mut den = 1;
        for g in gens {
            if g.len() != r {
                return Err(Error::DimensionMismatch { expected: r, got: g.len() });
            }
            den = den.lcm(&common_denominator(g));
        }
        let rows: Vec<Vec<Int>> = gens
            .iter()
            .map(|g| g.iter().map(|q| (q * den).to_integer()).collect())
            .collect();
        let h = IntMatrix::from_rows(&rows, r)?.hermite_rows();
        if h.rows() != r {
            return Err(Error::NotFullDimensional { dim: h.rows(), rank: r });
        }
        Self::from_basis(h.transpose(), den)
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Numerators of the basis (as columns) and their common denominator.
    pub fn basis(&self) -> (&IntMatrix, Int) {
        (&self.basis, self.denom)
    }

    /// Reference coordinates of a lattice point.
    pub fn to_reference(&self, p: &[Int]) -> Vec<Rational> {
        self.basis.mul_vec(p).into_iter().map(|x| Rational::new(x, self.denom)).collect()
    }

    /// Rational coordinates in the integral basis of a reference vector.
    pub fn coordinates_of(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: x.len() });
        }
        let den = common_denominator(x);
        let scaled: Vec<Int> = x.iter().map(|q| (q * den).to_integer()).collect();
        Ok(self
            .inverse
            .mul_vec(&scaled)
            .into_iter()
            .map(|v| Rational::new(v, self.inverse_denom * den))
            .collect())
    }

    /// The lattice point with the given reference coordinates, if it is one.
    pub fn from_reference(&self, x: &[Rational]) -> Result<LatticePoint> {
        integral(&self.coordinates_of(x)?).map(LatticePoint)
    }

    pub fn contains_reference(&self, x: &[Rational]) -> bool {
        self.from_reference(x).is_ok()
    }

    /// `Hom(L, Z)` with the dual basis.
    pub fn dual(&self) -> Self {
        Self {
            basis: self.inverse.transpose(),
            denom: self.inverse_denom,
            inverse: self.basis.transpose(),
            inverse_denom: self.denom,
        }
    }

    /// Covolume of the lattice in reference coordinates.
    pub fn covolume(&self) -> Rational {
        let r = self.rank() as u32;
        Rational::new(self.basis.det().abs(), self.denom.pow(r))
    }
}

fn scale(m: &IntMatrix, k: Int) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] *= k;
        }
    }
    out
}

fn reduce(m: &IntMatrix, den: Int) -> (IntMatrix, Int) {
    let mut g = den;
    for i in 0..m.rows() {
        g = g.gcd(&content(m.row(i)));
    }
    if g <= 1 {
        return (m.clone(), den);
    }
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] /= g;
        }
    }
    (out, den / g)
}

/// Shorthand for a reference vector with a shared denominator.
pub fn ratvec(num: &[Int], den: Int) -> Vec<Rational> {
    num.iter().map(|&x| Rational::new(x, den)).collect()
}
