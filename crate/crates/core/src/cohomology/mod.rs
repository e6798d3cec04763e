//! Cohomology of sheaves on split projective bundles over projective space.

mod bott;
mod bundle;
mod engine;
mod les;
mod projbundle;
mod vanishing;
mod vector;

pub use bott::{bott_forms, bott_line, tangent_twist};
pub use bundle::{
    declared_sequences, gluing_sequence, normal_sequence, relative_euler, tangent_sequence, BundleExpr,
    ExactSeqSpec, GLUING_SEQUENCE, NORMAL_SEQUENCE, RELATIVE_EULER, TANGENT_SEQUENCE,
};
pub use engine::{cohomology_of, cohomology_with_log, les_propagate, DerivationStep};
pub use les::{solve_sequence, Position};
pub use projbundle::{line_twist_cohomology, pullback_tangent_cohomology, sym_decompose, ProjBundleData};
pub use vanishing::{
    verify_vanishing, ConditionResult, GroupResult, VanishingReport, COMPONENT_TWIST, CRITERION_K, CRITERION_L,
};
pub use vector::{Bound, CohomologyVector};
