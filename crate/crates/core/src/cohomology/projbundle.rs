use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::bott::{bott_line, tangent_twist};
use super::CohomologyVector;
use crate::arith::{binomial, Int};
use crate::{Error, Result};

/// `F_a = P(O(a) ⊕ W ⊗ O)` over `P^{n-1}` with `dim W = n`, so that
/// `p_* O_F(t) = S^t(O(a) ⊕ O^n)` for `t >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjBundleData {
    n: usize,
    a: Int,
}

impl ProjBundleData {
    pub fn new(n: usize, a: Int) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("base P^{} is degenerate; n >= 2 required", n as i64 - 1)));
        }
        if a < 0 {
            return Err(Error::InvalidArgument(format!("negative twist {a}")));
        }
        Ok(Self { n, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> Int {
        self.a
    }

    pub fn base_dim(&self) -> usize {
        self.n - 1
    }

    pub fn fiber_dim(&self) -> usize {
        self.n
    }

    pub fn total_dim(&self) -> usize {
        2 * self.n - 1
    }
}

/// `S^t(O(a) ⊕ O^n) = ⊕_j O(ja)^{C(t-j+n-1, n-1)}` as `(degree, multiplicity)`
/// pairs, by decreasing degree.
pub fn sym_decompose(b: &ProjBundleData, t: Int) -> Result<Vec<(Int, u64)>> {
    if t < 0 {
        return Err(Error::InvalidArgument(format!("no symmetric power S^{t}")));
    }
    let n = b.n as Int;
    let mut parts: BTreeMap<Int, u64> = BTreeMap::new();
    for j in 0..=t {
        *parts.entry(j * b.a).or_default() += binomial(t - j + n - 1, n - 1);
    }
    Ok(parts.into_iter().rev().collect())
}

/// `h^*(F, O_F(t) ⊗ p^*O(l))`.
pub fn line_twist_cohomology(b: &ProjBundleData, t: Int, l: Int) -> Result<CohomologyVector> {
    pushforward_sum(b, t, |deg| bott_line(b.base_dim(), deg + l))
}

/// `h^*(F, p^*(T_P(l)) ⊗ O_F(t))`.
pub fn pullback_tangent_cohomology(b: &ProjBundleData, t: Int, l: Int) -> Result<CohomologyVector> {
    pushforward_sum(b, t, |deg| tangent_twist(b.base_dim(), deg + l))
}

/// Sums the base cohomology over the pieces of `p_* O_F(t)`; all direct
/// images vanish when `-n <= t < 0`.
fn pushforward_sum(b: &ProjBundleData, t: Int, base: impl Fn(Int) -> CohomologyVector) -> Result<CohomologyVector> {
    let top = b.total_dim();
    if t < -(b.n as Int) {
        return Err(Error::Capacity(format!(
            "O_F({t}) with t < -{}: relative duality is not implemented",
            b.n
        )));
    }
    let mut acc = CohomologyVector::zeros(top);
    if t < 0 {
        return Ok(acc);
    }
    for (deg, mult) in sym_decompose(b, t)? {
        acc = acc.direct_sum(&base(deg).times(mult).with_top(top)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn symmetric_powers() {
        let b = ProjBundleData::new(2, 2).unwrap();
        assert_eq!(sym_decompose(&b, 0).unwrap(), vec![(0, 1)]);
        assert_eq!(sym_decompose(&b, 2).unwrap(), vec![(4, 1), (2, 2), (0, 3)]);
        for t in 0..6 {
            let total: u64 = sym_decompose(&b, t).unwrap().iter().map(|p| p.1).sum();
            assert_eq!(total, binomial(t + 2, 2));
        }
        assert!(sym_decompose(&b, -1).is_err());
        let trivial = ProjBundleData::new(3, 0).unwrap();
        assert_eq!(sym_decompose(&trivial, 2).unwrap(), vec![(0, 10)]);
    }

    #[test]
    fn line_twists() {
        let b = ProjBundleData::new(2, 2).unwrap();
        assert_eq!(line_twist_cohomology(&b, 1, 1).unwrap(), CohomologyVector::exact(vec![8, 0, 0, 0]));
        assert!(line_twist_cohomology(&b, -1, 5).unwrap().is_zero());
        assert!(line_twist_cohomology(&b, -2, 5).unwrap().is_zero());
        assert!(matches!(line_twist_cohomology(&b, -3, 0), Err(Error::Capacity(_))));
        let b3 = ProjBundleData::new(3, 2).unwrap();
        assert_eq!(line_twist_cohomology(&b3, 0, 0).unwrap(), CohomologyVector::exact(vec![1, 0, 0, 0, 0, 0]));
    }
}
