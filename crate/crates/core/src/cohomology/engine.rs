use alloc::format;
use alloc::vec::Vec;

use super::bundle::{gluing_sequence, normal_sequence, relative_euler, tangent_sequence, BundleExpr, ExactSeqSpec};
use super::les::{solve_sequence, Position};
use super::projbundle::{line_twist_cohomology, pullback_tangent_cohomology};
use super::{CohomologyVector, ProjBundleData};
use crate::arith::Int;
use crate::{Error, Result};

/// One step of a derivation: a directly computed group or a long exact
/// sequence solved for one member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationStep {
    /// `h^*(O_F(t) ⊗ p^*O(l))` from the pushforward and the Bott formula.
    LineTwist { t: Int, l: Int, result: CohomologyVector },
    /// `h^*(p^*T_P(l) ⊗ O_F(t))` from the projection formula.
    PullbackTangent { t: Int, l: Int, result: CohomologyVector },
    Sequence {
        citation: &'static str,
        twist: (Int, Int),
        unknown: Position,
        sub: CohomologyVector,
        middle: CohomologyVector,
        quotient: CohomologyVector,
    },
}

impl DerivationStep {
    pub fn citation(&self) -> &'static str {
        match self {
            Self::LineTwist { .. } => "pushforward of O_F(t) and the Bott formula",
            Self::PullbackTangent { .. } => "projection formula and the Bott formula for T_P",
            Self::Sequence { citation, .. } => citation,
        }
    }

    /// The group this step determined.
    pub fn result(&self) -> &CohomologyVector {
        match self {
            Self::LineTwist { result, .. } | Self::PullbackTangent { result, .. } => result,
            Self::Sequence { unknown, sub, middle, quotient, .. } => match unknown {
                Position::Sub => sub,
                Position::Middle => middle,
                Position::Quotient => quotient,
            },
        }
    }
}

/// `h^*(e)` on the bundle `b`.
pub fn cohomology_of(b: &ProjBundleData, e: &BundleExpr) -> Result<CohomologyVector> {
    cohomology_with_log(b, e, &mut Vec::new())
}

/// As [`cohomology_of`], appending every step of the derivation to `log`.
pub fn cohomology_with_log(b: &ProjBundleData, e: &BundleExpr, log: &mut Vec<DerivationStep>) -> Result<CohomologyVector> {
    eval(b, e, (0, 0), log)
}

/// Solves the declared sequence `seq` twisted by `O_F(t) ⊗ p^*O(l)` for its
/// unknown member; returns `(sub, middle, quotient)`.
pub fn les_propagate(
    b: &ProjBundleData,
    seq: &ExactSeqSpec,
    twist: (Int, Int),
) -> Result<(CohomologyVector, CohomologyVector, CohomologyVector)> {
    les_with_log(b, seq, twist, &mut Vec::new())
}

fn les_with_log(
    b: &ProjBundleData,
    seq: &ExactSeqSpec,
    twist: (Int, Int),
    log: &mut Vec<DerivationStep>,
) -> Result<(CohomologyVector, CohomologyVector, CohomologyVector)> {
    let mut known = |p: Position| -> Result<Option<CohomologyVector>> {
        if p == seq.unknown {
            return Ok(None);
        }
        eval(b, seq.member(p), twist, log).map(Some)
    };
    let sub = known(Position::Sub)?;
    let middle = known(Position::Middle)?;
    let quotient = known(Position::Quotient)?;
    let (sub, middle, quotient) = solve_sequence(sub.as_ref(), middle.as_ref(), quotient.as_ref())
        .map_err(|e| match e {
            Error::Refused(msg) => Error::Refused(format!("{}: {msg}", seq.citation)),
            other => other,
        })?;
    log.push(DerivationStep::Sequence {
        citation: seq.citation,
        twist,
        unknown: seq.unknown,
        sub: sub.clone(),
        middle: middle.clone(),
        quotient: quotient.clone(),
    });
    Ok((sub, middle, quotient))
}

fn eval(b: &ProjBundleData, e: &BundleExpr, tw: (Int, Int), log: &mut Vec<DerivationStep>) -> Result<CohomologyVector> {
    let (t, l) = tw;
    match e {
        BundleExpr::LineTwist { t: t0, l: l0 } => {
            let (t, l) = (t0 + t, l0 + l);
            let result = line_twist_cohomology(b, t, l)?;
            log.push(DerivationStep::LineTwist { t, l, result: result.clone() });
            Ok(result)
        }
        BundleExpr::PullbackTangentTwist { l: l0 } => {
            let l = l0 + l;
            let result = pullback_tangent_cohomology(b, t, l)?;
            log.push(DerivationStep::PullbackTangent { t, l, result: result.clone() });
            Ok(result)
        }
        BundleExpr::RelativeTangent => Ok(les_with_log(b, &relative_euler(b), tw, log)?.2),
        BundleExpr::Tangent => Ok(les_with_log(b, &tangent_sequence(), tw, log)?.1),
        BundleExpr::AmbientTangentRestricted | BundleExpr::StructureOfF => {
            Ok(les_with_log(b, &normal_sequence(), tw, log)?.1)
        }
        // T_X ⊗ O_G(-F) with O_G(-F) = O_G(-1) ⊗ p^*O(2) on G ≅ F
        BundleExpr::StructureOfG => eval(b, &BundleExpr::AmbientTangentRestricted, (t - 1, l + 2), log),
        BundleExpr::StructureOfE => {
            if t != l {
                return Err(Error::InvalidArgument(format!(
                    "twist ({t}, {l}) of a sheaf on E must come from O_X(-iE), i.e. t = l"
                )));
            }
            Ok(les_with_log(b, &gluing_sequence(), tw, log)?.1)
        }
        BundleExpr::Sum(parts) => {
            let mut acc = CohomologyVector::zeros(b.total_dim());
            for p in parts {
                acc = acc.direct_sum(&eval(b, p, tw, log)?)?;
            }
            Ok(acc)
        }
        BundleExpr::Twist(inner, t0, l0) => eval(b, inner, (t + t0, l + l0), log),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn line_twist_examples() {
        let b = ProjBundleData::new(2, 2).unwrap();
        assert_eq!(cohomology_of(&b, &BundleExpr::line(1, 1)).unwrap(), CohomologyVector::exact(vec![8, 0, 0, 0]));
        assert!(cohomology_of(&b, &BundleExpr::line(-1, 5)).unwrap().is_zero());
    }

    #[test]
    fn tangent_of_f_twisted_by_minus_f() {
        let b = ProjBundleData::new(3, 2).unwrap();
        let h = cohomology_of(&b, &BundleExpr::Tangent.twisted(2, -1)).unwrap();
        assert!(h.vanishes(1));
    }

    #[test]
    fn relative_euler_vanishing() {
        let b = ProjBundleData::new(3, 2).unwrap();
        for k in 0..4 {
            for l in -2..4 {
                let (_, _, c) = les_propagate(&b, &relative_euler(&b), (k, l)).unwrap();
                assert!(c.vanishes(1), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn e_twist_must_be_diagonal() {
        let b = ProjBundleData::new(3, 2).unwrap();
        assert!(cohomology_of(&b, &BundleExpr::StructureOfE.twisted(1, 2)).is_err());
    }

    #[test]
    fn log_records_the_chain() {
        let b = ProjBundleData::new(3, 2).unwrap();
        let mut log = Vec::new();
        cohomology_with_log(&b, &BundleExpr::StructureOfE.twisted(1, 1), &mut log).unwrap();
        let cites: Vec<&str> = log.iter().map(|s| s.citation()).collect();
        for c in [super::super::bundle::RELATIVE_EULER, super::super::bundle::TANGENT_SEQUENCE,
                  super::super::bundle::NORMAL_SEQUENCE, super::super::bundle::GLUING_SEQUENCE] {
            assert!(cites.contains(&c));
        }
        assert_eq!(log.last().unwrap().citation(), super::super::bundle::GLUING_SEQUENCE);
    }
}
