use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A dimension known exactly (`lo == hi`) or only up to an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub lo: u64,
    pub hi: u64,
}

impl Bound {
    pub const ZERO: Bound = Bound { lo: 0, hi: 0 };

    pub fn exact(v: u64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn range(lo: u64, hi: u64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<u64> {
        self.is_exact().then_some(self.lo)
    }

    /// Known to vanish.
    pub fn is_zero(&self) -> bool {
        self.hi == 0
    }

    pub fn plus(&self, other: &Bound) -> Bound {
        Bound { lo: self.lo + other.lo, hi: self.hi + other.hi }
    }

    pub fn times(&self, k: u64) -> Bound {
        Bound { lo: self.lo * k, hi: self.hi * k }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Dimensions `h^0, …, h^top` of the cohomology of a sheaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyVector {
    dims: Vec<Bound>,
}

impl CohomologyVector {
    pub fn exact(dims: Vec<u64>) -> Self {
        Self { dims: dims.into_iter().map(Bound::exact).collect() }
    }

    pub fn zeros(top: usize) -> Self {
        Self { dims: alloc::vec![Bound::ZERO; top + 1] }
    }

    pub fn from_bounds(dims: Vec<Bound>) -> Self {
        Self { dims }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.dims
    }

    /// `h^i`; degrees above the top are zero.
    pub fn get(&self, i: usize) -> Bound {
        self.dims.get(i).copied().unwrap_or(Bound::ZERO)
    }

    pub fn is_exact(&self) -> bool {
        self.dims.iter().all(Bound::is_exact)
    }

    pub fn exact_dims(&self) -> Option<Vec<u64>> {
        self.dims.iter().map(Bound::value).collect()
    }

    pub fn vanishes(&self, i: usize) -> bool {
        self.get(i).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(Bound::is_zero)
    }

    pub fn euler_characteristic(&self) -> Option<i64> {
        let mut chi = 0i64;
        for (i, b) in self.dims.iter().enumerate() {
            let v = b.value()? as i64;
            chi += if i % 2 == 0 { v } else { -v };
        }
        Some(chi)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.dims.len() != other.dims.len() {
            return Err(Error::DimensionMismatch { expected: self.dims.len(), got: other.dims.len() });
        }
        Ok(Self { dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn times(&self, k: u64) -> Self {
        Self { dims: self.dims.iter().map(|b| b.times(k)).collect() }
    }

    /// Same dimensions placed in a vector of a different length; entries
    /// beyond the new top must vanish.
    pub fn with_top(&self, top: usize) -> Result<Self> {
        if self.dims.iter().skip(top + 1).any(|b| !b.is_zero()) {
            return Err(Error::InvalidArgument("nonzero cohomology above the new top degree".into()));
        }
        Ok(Self { dims: (0..=top).map(|i| self.get(i)).collect() })
    }
}

impl fmt::Display for CohomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}
