//! Small exact-arithmetic helpers shared by every module.

use alloc::vec::Vec;
use num_integer::Integer;
use num_rational::Ratio;

use crate::{Error, Result};

/// Integer scalar used for lattice coordinates.
pub type Int = i64;

/// Exact rational scalar used for reference (ambient) coordinates.
pub type Rational = Ratio<i64>;

/// Non-negative gcd of a slice; `0` for the zero vector.
pub fn content(v: &[Int]) -> Int {
    v.iter().fold(0, |g, &x| g.gcd(&x))
}

/// Divides `v` by its content. Returns the content that was removed.
pub fn make_primitive(v: &mut [Int]) -> Int {
    let g = content(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    g
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n` (with `n >= 0`).
/// Negative `n` yields zero as well: only the combinatorial range is used.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Converts a rational vector with a common denominator into an integer
/// vector, failing if any entry is not integral.
pub fn integral(v: &[Rational]) -> Result<Vec<Int>> {
    v.iter()
        .map(|q| {
            if q.is_integer() {
                Ok(*q.numer())
            } else {
                Err(Error::NotInLattice)
            }
        })
        .collect()
}

/// Lowest common multiple of the denominators of `v`.
pub fn common_denominator(v: &[Rational]) -> Int {
    v.iter().fold(1, |l, q| l.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(-2, 1), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn primitive_content() {
        let mut v = [6, -9, 3];
        assert_eq!(make_primitive(&mut v), 3);
        assert_eq!(v, [2, -3, 1]);
        assert_eq!(content(&[0, 0]), 0);
    }
}
