//! Exact toric model of the cyclic quotient singularity `C^{2n}/<ζ>` with
//! weights `(1,2,…,1,2)` and order 3, its normalized blow-up, and a sheaf
//! cohomology engine for the split projective bundles that appear as the
//! exceptional components.
//!
//! Everything here is exact integer (or rational) arithmetic. The crate is
//! `no_std` with `alloc`; enable the `std` feature for `std::error::Error`
//! integration and `parallel` for rayon-backed loops in the heavier oracles.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod arith;
pub mod cohomology;

mod error;
pub mod lattice_core;
pub mod model;
pub mod report;
pub mod toric;

pub use error::{Error, Result};
pub use lattice_core::{Cone, HilbertBasis, IntMatrix, Lattice, LatticePoint};

pub use toric::{Fan, MonomialIdeal, TDivisor};
