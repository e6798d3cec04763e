//! The vanishing of `H^1` for the tangent sheaves of the exceptional divisor
//! of the model blow-up, derived through the chain
//! relative Euler → tangent sequence → normal bundle → gluing.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::engine::{cohomology_with_log, DerivationStep};
use super::projbundle::{line_twist_cohomology, pullback_tangent_cohomology};
use super::{BundleExpr, CohomologyVector, ProjBundleData};
use crate::arith::Int;
use crate::{Error, Result};

/// Twist of the exceptional components: both are `F_2`.
pub const COMPONENT_TWIST: Int = 2;

/// Range of `(k, l)` sampled for the line-bundle criterion.
pub const CRITERION_K: core::ops::RangeInclusive<Int> = 0..=6;
pub const CRITERION_L: core::ops::RangeInclusive<Int> = -2..=6;

/// One cohomology group whose vanishing is claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupResult {
    pub label: String,
    pub expr: BundleExpr,
    pub degree: usize,
    pub vector: Result<CohomologyVector, Error>,
    pub chain: Vec<DerivationStep>,
}

impl GroupResult {
    pub fn vanishes(&self) -> bool {
        matches!(&self.vector, Ok(v) if v.vanishes(self.degree))
    }
}

/// A sampled sufficient condition, with the twists where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub label: String,
    pub samples: usize,
    pub failures: Vec<(Int, Int)>,
}

impl ConditionResult {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: usize,
    pub i_max: usize,
    /// `false` below `n = 3`, where the values are only reported.
    pub asserted: bool,
    pub groups: Vec<GroupResult>,
    pub conditions: Vec<ConditionResult>,
}

impl VanishingReport {
    pub fn all_vanish(&self) -> bool {
        self.groups.iter().all(GroupResult::vanishes)
    }

    pub fn conditions_hold(&self) -> bool {
        self.conditions.iter().all(ConditionResult::holds)
    }
}

/// `H^1(F, T_F ⊗ O_F(-F))`, `H^1(G, T_G ⊗ O_G(-G))` and
/// `H^1(E, T_X|_E ⊗ O_E(-iE))` for `1 <= i <= i_max`.
///
/// Both components are `F_2` with normal bundle `O(-2) ⊗ p^*O(1)`, so
/// `O(-F)|_F = O_F(2) ⊗ p^*O(-1)`, and the same holds for `G`.
pub fn verify_vanishing(n: usize, i_max: usize) -> Result<VanishingReport> {
    if i_max == 0 {
        return Err(Error::InvalidArgument("i_max must be at least 1".into()));
    }
    let b = ProjBundleData::new(n, COMPONENT_TWIST)?;
    let mut groups = Vec::new();
    let mut run = |label: String, expr: BundleExpr| {
        let mut chain = Vec::new();
        let vector = cohomology_with_log(&b, &expr, &mut chain);
        groups.push(GroupResult { label, expr, degree: 1, vector, chain });
    };
    let minus_normal = BundleExpr::Tangent.twisted(2, -1);
    run("H^1(F, T_F ⊗ O_F(-F))".into(), minus_normal.clone());
    run("H^1(G, T_G ⊗ O_G(-G))".into(), minus_normal);
    for i in 1..=i_max as Int {
        run(format!("H^1(E, T_X|E ⊗ O_E(-{i}E))"), BundleExpr::StructureOfE.twisted(i, i));
    }
    let mut conditions = Vec::new();
    let mut grid = |label: &str, f: &dyn Fn(Int, Int) -> Result<CohomologyVector>, degrees: &[usize]| -> Result<()> {
        let mut samples = 0;
        let mut failures = Vec::new();
        for k in CRITERION_K {
            for l in CRITERION_L {
                samples += 1;
                let h = f(k, l)?;
                if degrees.iter().any(|&d| !h.vanishes(d)) {
                    failures.push((k, l));
                }
            }
        }
        conditions.push(ConditionResult { label: label.into(), samples, failures });
        Ok(())
    };
    grid("H^1 = H^2 = 0 for O_F(k)⊗p*O(l), l > -3", &|k, l| line_twist_cohomology(&b, k, l), &[1, 2])?;
    grid("H^1 = 0 for p*T_P(l)⊗O_F(k), l > -3", &|k, l| pullback_tangent_cohomology(&b, k, l), &[1])?;
    // every line twist with l > -3 met along the chains
    let mut samples = 0;
    let mut failures = Vec::new();
    for step in groups.iter().flat_map(|g| &g.chain) {
        if let DerivationStep::LineTwist { t, l, result } = step {
            if *t >= 0 && *l > -3 {
                samples += 1;
                if !(result.vanishes(1) && result.vanishes(2)) && !failures.contains(&(*t, *l)) {
                    failures.push((*t, *l));
                }
            }
        }
    }
    conditions.push(ConditionResult {
        label: "H^1 = H^2 = 0 for every O_F(k)⊗p*O(l), l > -3, used in the chains".into(),
        samples,
        failures,
    });
    Ok(VanishingReport { n, i_max, asserted: n >= 3, groups, conditions })
}
