//! The quotient `C^{2n}/<ζ>`, `ζ` of order 3 acting with weights
//! `(1,2,…,1,2)`, and its normalized blow-up at the origin.
//!
//! In reference coordinates `N = Z^{2n} + Z·(1,2,…,1,2)/3`, `σ` is the
//! positive orthant and the maximal ideal of the origin is generated by the
//! Hilbert basis of `M ∩ σ∨`. The blow-up has two extra rays
//! `e_{2n+1} = (1,2,…,1,2)/3` and `e_{2n+2} = (2,1,…,2,1)/3`. Rays are
//! labelled `1..=2n+2` in that order throughout this module.

mod chart;
mod verify;

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{Int, Rational};
use crate::lattice_core::{hilbert_basis, ratvec, Cone, Lattice, LatticePoint};
use crate::toric::{Fan, MonomialIdeal};
use crate::{Error, Result};

pub use chart::{local_chart_coordinates, ChartReport};
pub use verify::{
    check_names, cohomology_checks, is_cohomology_check, verify_model, Components, VerifyOptions, CHECK_BLOWUP_FAN, CHECK_BUNDLE_IDENTITIES,
    CHECK_BUNDLE_STRUCTURE, CHECK_CURVE_DEGREES, CHECK_DISCREPANCY, CHECK_HILBERT_BASIS, CHECK_INVOLUTION,
    CHECK_LOCAL_CHARTS, CHECK_REDUCEDNESS, CHECK_REGULARITY, CHECK_SNC,
};

/// Largest `n` handled by the model constructors.
pub const MAX_N: usize = 4;

/// The group data: order 3, weights `(1,2,…,1,2)` of length `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub n: usize,
    pub order: Int,
    pub weights: Vec<Int>,
}

impl QuotientData {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, order: 3, weights: (0..2 * n).map(|k| if k % 2 == 0 { 1 } else { 2 }).collect() })
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::Capacity(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// The model: lattice `N`, cone `σ` and the maximal ideal of the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub data: QuotientData,
    pub lattice: Lattice,
    pub sigma: Cone,
    pub ideal: MonomialIdeal,
}

/// `N = Z^d + Z·w/r` and the positive orthant, for the cyclic quotient
/// `C^d / μ_r` acting with weights `w`.
pub(crate) fn cyclic_quotient(order: Int, weights: &[Int]) -> Result<(Lattice, Cone)> {
    let d = weights.len();
    if d == 0 || order < 1 {
        return Err(Error::InvalidArgument("cyclic quotient needs weights and a positive order".into()));
    }
    let mut gens: Vec<Vec<Rational>> = (0..d)
        .map(|i| ratvec(&LatticePoint::unit(d, i), 1))
        .collect();
    gens.push(ratvec(weights, order));
    let lattice = Lattice::from_generators(&gens)?;
    let rays = (0..d)
        .map(|i| lattice.from_reference(&ratvec(&LatticePoint::unit(d, i), 1)))
        .collect::<Result<Vec<_>>>()?;
    let sigma = Cone::new(lattice.clone(), rays)?;
    Ok((lattice, sigma))
}

pub fn build_model(n: usize) -> Result<Model> {
    let data = QuotientData::new(n)?;
    let (lattice, sigma) = cyclic_quotient(data.order, &data.weights)?;
    let dual = sigma.dual_cone()?;
    let hb = hilbert_basis(&dual)?;
    let ideal = MonomialIdeal::new(dual, hb.elements().to_vec())?;
    Ok(Model { data, lattice, sigma, ideal })
}

/// Exponent vectors (reference coordinates of `M`) of the invariant
/// generators: `z_{2i} z_{2j-1}`, and the products of three even or three
/// odd coordinates.
pub fn expected_generators(n: usize) -> Result<Vec<Vec<Int>>> {
    check_n(n)?;
    let d = 2 * n;
    let mut out = Vec::new();
    let mono = |idx: &[usize]| {
        let mut v = alloc::vec![0; d];
        idx.iter().for_each(|&k| v[k] += 1);
        v
    };
    for i in 0..n {
        for j in 0..n {
            out.push(mono(&[2 * i + 1, 2 * j]));
        }
    }
    for parity in [1, 0] {
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    out.push(mono(&[2 * i + parity, 2 * j + parity, 2 * k + parity]));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Reference coordinates of the ray labelled `label` (1-based).
pub fn model_ray(n: usize, label: usize) -> Result<Vec<Rational>> {
    let d = 2 * n;
    match label {
        k if (1..=d).contains(&k) => Ok(ratvec(&LatticePoint::unit(d, k - 1), 1)),
        k if k == d + 1 => Ok(ratvec(&(0..d).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect::<Vec<_>>(), 3)),
        k if k == d + 2 => Ok(ratvec(&(0..d).map(|i| if i % 2 == 0 { 2 } else { 1 }).collect::<Vec<_>>(), 3)),
        k => Err(Error::InvalidArgument(format!("ray label {k} outside 1..={}", d + 2))),
    }
}

/// 1-based label of a ray of the model (reference coordinates).
pub fn ray_label(n: usize, reference: &[Rational]) -> Option<usize> {
    (1..=2 * n + 2).find(|&k| model_ray(n, k).ok().as_deref() == Some(reference))
}

/// Maximal cones of the blow-up as label sets: `σ_{i,j}` omits
/// `e_{2i}, e_{2j-1}`; `σ'_i` omits `e_{2i}, e_{2n+1}`; `σ''_j` omits
/// `e_{2j-1}, e_{2n+2}`.
pub fn expected_cone_labels(n: usize) -> Vec<(ConeName, Vec<usize>)> {
    let all = 2 * n + 2;
    let omit = |a: usize, b: usize| (1..=all).filter(|&k| k != a && k != b).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            out.push((ConeName::Mixed(i, j), omit(2 * i, 2 * j - 1)));
        }
    }
    for i in 1..=n {
        out.push((ConeName::Even(i), omit(2 * i, 2 * n + 1)));
    }
    for j in 1..=n {
        out.push((ConeName::Odd(j), omit(2 * j - 1, 2 * n + 2)));
    }
    out
}

/// Names of the maximal cones of the blow-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeName {
    /// `σ_{i,j}`
    Mixed(usize, usize),
    /// `σ'_i`
    Even(usize),
    /// `σ''_j`
    Odd(usize),
}

impl core::fmt::Display for ConeName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::Mixed(i, j) => write!(f, "sigma_{i},{j}"),
            Self::Even(i) => write!(f, "sigma'_{i}"),
            Self::Odd(j) => write!(f, "sigma''_{j}"),
        }
    }
}

/// The blow-up fan with rays in label order, built from the cone list.
pub fn expected_fan(n: usize) -> Result<Fan> {
    check_n(n)?;
    let (lattice, _) = cyclic_quotient(3, &QuotientData::new(n)?.weights)?;
    let rays = (1..=2 * n + 2)
        .map(|k| lattice.from_reference(&model_ray(n, k)?))
        .collect::<Result<Vec<_>>>()?;
    let mut cones: Vec<Vec<usize>> = expected_cone_labels(n)
        .into_iter()
        .map(|(_, c)| c.into_iter().map(|k| k - 1).collect())
        .collect();
    cones.sort();
    Fan::new(lattice, rays, cones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;

    #[test]
    fn generator_counts() {
        for n in 1..=4 {
            let expected = (n * n) as u64 + 2 * binomial(n as i64 + 2, 3);
            assert_eq!(expected_generators(n).unwrap().len() as u64, expected);
        }
        assert!(expected_generators(5).is_err());
    }

    #[test]
    fn n1_fan() {
        let f = expected_fan(1).unwrap();
        assert_eq!(f.num_rays(), 4);
        assert_eq!(f.max_cones().len(), 3);
        assert!(f.is_smooth());
        let labels = expected_cone_labels(1);
        assert_eq!(labels[1], (ConeName::Even(1), vec![1, 4]));
        assert_eq!(labels[2], (ConeName::Odd(1), vec![2, 3]));
    }

    #[test]
    fn model_lattice() {
        let m = build_model(1).unwrap();
        assert_eq!(m.lattice.covolume(), Rational::new(1, 3));
        assert_eq!(m.ideal.generators().len(), 3);
        assert!(build_model(0).is_err());
        assert!(build_model(5).is_err());
    }
}
