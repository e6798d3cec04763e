//! Lattices, rational polyhedral cones and affine monoids.

mod cone;
pub mod dd;
mod hilbert;
mod lattice;
mod matrix;

pub use cone::{quotient_by, quotient_lattice, Cone, Projection};
pub use hilbert::{
    hilbert_basis, hilbert_basis_with_cap, parallelepiped_points, HilbertBasis, DEFAULT_MAX_RANK,
};
pub use lattice::{ratvec, Lattice, LatticePoint};
pub use matrix::{kernel_vector, IntMatrix, Smith};
pub(crate) use matrix::rank_i128;
