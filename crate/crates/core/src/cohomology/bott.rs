use alloc::vec;

use super::CohomologyVector;
use crate::arith::{binomial, Int};
use crate::{Error, Result};

/// `h^*(P^m, O(d))`.
pub fn bott_line(m: usize, d: Int) -> CohomologyVector {
    assert!(m >= 1, "P^0 is not covered");
    let mi = m as Int;
    let mut h = vec![0u64; m + 1];
    if d >= 0 {
        h[0] = binomial(d + mi, mi);
    }
    if d <= -mi - 1 {
        h[m] = binomial(-d - 1, mi);
    }
    CohomologyVector::exact(h)
}

/// `h^*(P^m, Ω^p(d))` by the Bott formula.
pub fn bott_forms(m: usize, p: usize, d: Int) -> Result<CohomologyVector> {
    if m == 0 || p > m {
        return Err(Error::InvalidArgument(alloc::format!("Ω^{p} on P^{m}")));
    }
    let (mi, pi) = (m as Int, p as Int);
    let mut h = vec![0u64; m + 1];
    if d > pi {
        h[0] = binomial(d + mi - pi, d) * binomial(d - 1, pi);
    }
    if d == 0 {
        h[p] = 1;
    }
    if d < pi - mi {
        h[m] = binomial(-d + pi, -d) * binomial(-d - 1, mi - pi);
    }
    Ok(CohomologyVector::exact(h))
}

/// `h^*(P^m, T(l))` through `T = Ω^{m-1}(m+1)`.
pub fn tangent_twist(m: usize, l: Int) -> CohomologyVector {
    bott_forms(m, m - 1, l + m as Int + 1).expect("m >= 1")
}
