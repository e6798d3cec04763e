use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use super::Fan;
use crate::arith::{dot, Int};
use crate::lattice_core::{IntMatrix, LatticePoint};
use crate::{Error, Result};

/// A torus-invariant Weil divisor `Σ a_ρ D_ρ`, one coefficient per ray of
/// the fan it was built against. Sections of `O(D)` are the characters `m`
/// with `<m, v_ρ> >= -a_ρ`; the canonical divisor is `-Σ D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TDivisor {
    coefficients: Vec<Int>,
}

impl TDivisor {
    pub fn new(fan: &Fan, coefficients: Vec<Int>) -> Result<Self> {
        if coefficients.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: fan.num_rays(), got: coefficients.len() });
        }
        Ok(Self { coefficients })
    }

    pub fn zero(fan: &Fan) -> Self {
        Self { coefficients: alloc::vec![0; fan.num_rays()] }
    }

    /// The prime divisor `D_i`.
    pub fn prime(fan: &Fan, i: usize) -> Self {
        let mut d = Self::zero(fan);
        d.coefficients[i] = 1;
        d
    }

    pub fn canonical(fan: &Fan) -> Self {
        Self { coefficients: alloc::vec![-1; fan.num_rays()] }
    }

    /// `div(χ^m) = Σ <m, v_ρ> D_ρ`.
    pub fn principal(fan: &Fan, m: &[Int]) -> Result<Self> {
        if m.len() != fan.rank() {
            return Err(Error::DimensionMismatch { expected: fan.rank(), got: m.len() });
        }
        Ok(Self { coefficients: fan.rays().iter().map(|v| dot(m, v)).collect() })
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> Int {
        self.coefficients[i]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scaled(&self, k: Int) -> Self {
        Self { coefficients: self.coefficients.iter().map(|a| a * k).collect() }
    }

    /// A character `m` with `self - other = div(χ^m)`, if the two divisors
    /// are linearly equivalent.
    pub fn linear_equivalence(&self, other: &Self, fan: &Fan) -> Result<Option<Vec<Int>>> {
        if self.len() != fan.num_rays() || other.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch { expected: fan.num_rays(), got: self.len().min(other.len()) });
        }
        let diff = self - other;
        let all: Vec<usize> = (0..fan.num_rays()).collect();
        let Some(m) = functional_with_values(fan, &all, &diff.coefficients)? else {
            return Ok(None);
        };
        Ok(Some(m))
    }

    pub fn is_linearly_equivalent(&self, other: &Self, fan: &Fan) -> Result<bool> {
        Ok(self.linear_equivalence(other, fan)?.is_some())
    }

    /// Restriction to the orbit closure of the cone spanned by `cone_rays`:
    /// first move the divisor off those rays within its class, then read off
    /// the coefficients of the star's rays.
    pub fn restrict(&self, fan: &Fan, cone_rays: &[usize]) -> Result<(super::StarFan, TDivisor)> {
        let star = fan.star_of_cone(cone_rays)?;
        let values: Vec<Int> = cone_rays.iter().map(|&i| self.coefficients[i]).collect();
        let m = functional_with_values(fan, cone_rays, &values)?
            .ok_or_else(|| Error::Internal("cone rays do not extend to a basis".into()))?;
        let shifted = self - &TDivisor::principal(fan, &m)?;
        debug_assert!(cone_rays.iter().all(|&i| shifted.coefficients[i] == 0));
        let coefficients = star.source_rays.iter().map(|&i| shifted.coefficients[i]).collect();
        Ok((star, TDivisor { coefficients }))
    }
}

impl Add for &TDivisor {
    type Output = TDivisor;
    fn add(self, rhs: &TDivisor) -> TDivisor {
        TDivisor { coefficients: self.coefficients.iter().zip(&rhs.coefficients).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &TDivisor {
    type Output = TDivisor;
    fn sub(self, rhs: &TDivisor) -> TDivisor {
        TDivisor { coefficients: self.coefficients.iter().zip(&rhs.coefficients).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &TDivisor {
    type Output = TDivisor;
    fn neg(self) -> TDivisor {
        self.scaled(-1)
    }
}

/// An integral `m` with `<m, v_i> = values[k]` for the listed rays `v_i`,
/// solved through the Smith form of the ray matrix.
pub(crate) fn functional_with_values(fan: &Fan, rays: &[usize], values: &[Int]) -> Result<Option<Vec<Int>>> {
    let r = fan.rank();
    let rows: Vec<&LatticePoint> = rays.iter().map(|&i| fan.ray(i)).collect();
    let a = IntMatrix::from_rows(&rows, r)?;
    let smith = a.smith();
    let ub = smith.u.mul_vec(values);
    let mut y = alloc::vec![0 as Int; r];
    for (i, &c) in ub.iter().enumerate() {
        let d = smith.diagonal.get(i).copied().unwrap_or(0);
        if d == 0 {
            if c != 0 {
                return Ok(None);
            }
        } else if c % d != 0 {
            return Ok(None);
        } else {
            y[i] = c / d;
        }
    }
    let m = smith.v.mul_vec(&y);
    if a.mul_vec(&m) != values {
        return Err(Error::Internal(format!("functional solve failed for rays {rays:?}")));
    }
    Ok(Some(m))
}
