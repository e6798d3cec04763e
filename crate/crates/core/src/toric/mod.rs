//! Toric geometry: fans, normalized blow-ups of monomial ideals, divisors,
//! line bundle cohomology, invariant curves and fan isomorphisms.

mod cech;
mod curves;
mod divisor;
mod fan;
mod ideal;
mod iso;
mod snc;
mod standard;

pub use cech::{line_bundle_cohomology, CechOracle, CECH_MAX_RANK};
pub use curves::{curve_degree, wall_relation};
pub use divisor::TDivisor;
pub use fan::{Fan, StarFan, Wall};
pub use ideal::{
    canonical_character, discrepancy, normal_fan_blowup, vanishing_order, vanishing_order_at, MonomialIdeal,
};
pub use iso::{fan_isomorphic, fan_isomorphic_with_cap, FanIsomorphism, MAX_CANDIDATES};
pub use snc::{snc_certificate, IntersectionReport, SncReport};
pub use standard::{product_fan, projbundle_fan, projective_space_fan, ProjBundleRays, PROJBUNDLE_MAX_N};

/// Star fan of the ray `ray_index`.
pub fn star_fan(f: &Fan, ray_index: usize) -> crate::Result<Fan> {
    f.star(ray_index)
}
