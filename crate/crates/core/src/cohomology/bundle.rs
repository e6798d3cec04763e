use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::les::Position;
use super::ProjBundleData;
use crate::arith::Int;

/// Symbolic sheaves on `F = F_a` (and on the exceptional divisor `E = F ∪ G`
/// of the model, whose components are both copies of `F_2`).
///
/// The `StructureOf*` atoms are the restrictions of the ambient tangent
/// bundle `T_X` to the pieces of the gluing sequence
/// `0 → O_G(-F) → O_E → O_F → 0`: `StructureOfE = T_X ⊗ O_E`,
/// `StructureOfF = T_X ⊗ O_F` and `StructureOfG = T_X ⊗ O_G(-F)`. A twist
/// `(i, i)` on them stands for `⊗ O_X(-iE)`, whose restriction to either
/// component is `O(i) ⊗ p^*O(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    /// `O_F(t) ⊗ p^*O(l)`.
    LineTwist { t: Int, l: Int },
    /// `p^*(T_{P^{n-1}}(l))`.
    PullbackTangentTwist { l: Int },
    /// `T_{F/P^{n-1}}`.
    RelativeTangent,
    /// `T_F`.
    Tangent,
    /// `T_X|_F`.
    AmbientTangentRestricted,
    StructureOfE,
    StructureOfF,
    StructureOfG,
    Sum(Vec<BundleExpr>),
    Twist(Box<BundleExpr>, Int, Int),
}

impl BundleExpr {
    pub fn line(t: Int, l: Int) -> Self {
        Self::LineTwist { t, l }
    }

    /// `self ⊗ O_F(t) ⊗ p^*O(l)`.
    pub fn twisted(self, t: Int, l: Int) -> Self {
        if (t, l) == (0, 0) {
            return self;
        }
        match self {
            Self::LineTwist { t: t0, l: l0 } => Self::LineTwist { t: t0 + t, l: l0 + l },
            Self::Twist(inner, t0, l0) => Self::Twist(inner, t0 + t, l0 + l),
            other => Self::Twist(Box::new(other), t, l),
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LineTwist { t, l } => write!(f, "O_F({t})⊗p*O({l})"),
            Self::PullbackTangentTwist { l } => write!(f, "p*T_P({l})"),
            Self::RelativeTangent => write!(f, "T_F/P"),
            Self::Tangent => write!(f, "T_F"),
            Self::AmbientTangentRestricted => write!(f, "T_X|F"),
            Self::StructureOfE => write!(f, "T_X⊗O_E"),
            Self::StructureOfF => write!(f, "T_X⊗O_F"),
            Self::StructureOfG => write!(f, "T_X⊗O_G(-F)"),
            Self::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ⊕ ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Self::Twist(inner, t, l) => write!(f, "({inner})⊗O_F({t})⊗p*O({l})"),
        }
    }
}

/// A short exact sequence `0 → sub → middle → quotient → 0` with the member
/// that is solved for from the other two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeqSpec {
    pub sub: BundleExpr,
    pub middle: BundleExpr,
    pub quotient: BundleExpr,
    pub unknown: Position,
    pub citation: &'static str,
}

impl ExactSeqSpec {
    pub fn member(&self, p: Position) -> &BundleExpr {
        match p {
            Position::Sub => &self.sub,
            Position::Middle => &self.middle,
            Position::Quotient => &self.quotient,
        }
    }
}

pub const RELATIVE_EULER: &str = "relative Euler sequence 0 → O_F → p*E^∨ ⊗ O_F(1) → T_F/P → 0";
pub const TANGENT_SEQUENCE: &str = "tangent sequence of the bundle projection 0 → T_F/P → T_F → p*T_P → 0";
pub const NORMAL_SEQUENCE: &str = "normal bundle sequence 0 → T_F → T_X|F → O_F(-2)⊗p*O(1) → 0";
pub const GLUING_SEQUENCE: &str = "gluing sequence 0 → O_G(-F) → O_E → O_F → 0 tensored with T_X";

/// `0 → O_F → O_F(1)⊗p*O(-a) ⊕ O_F(1)^n → T_{F/P} → 0`.
pub fn relative_euler(b: &ProjBundleData) -> ExactSeqSpec {
    let mut middle = vec![BundleExpr::line(1, -b.a())];
    middle.extend((0..b.n()).map(|_| BundleExpr::line(1, 0)));
    ExactSeqSpec {
        sub: BundleExpr::line(0, 0),
        middle: BundleExpr::Sum(middle),
        quotient: BundleExpr::RelativeTangent,
        unknown: Position::Quotient,
        citation: RELATIVE_EULER,
    }
}

pub fn tangent_sequence() -> ExactSeqSpec {
    ExactSeqSpec {
        sub: BundleExpr::RelativeTangent,
        middle: BundleExpr::Tangent,
        quotient: BundleExpr::PullbackTangentTwist { l: 0 },
        unknown: Position::Middle,
        citation: TANGENT_SEQUENCE,
    }
}

/// `0 → T_F → T_X|_F → N_{F/X} → 0` with `N_{F/X} = O_F(-2) ⊗ p^*O(1)`.
pub fn normal_sequence() -> ExactSeqSpec {
    ExactSeqSpec {
        sub: BundleExpr::Tangent,
        middle: BundleExpr::AmbientTangentRestricted,
        quotient: BundleExpr::line(-2, 1),
        unknown: Position::Middle,
        citation: NORMAL_SEQUENCE,
    }
}

pub fn gluing_sequence() -> ExactSeqSpec {
    ExactSeqSpec {
        sub: BundleExpr::StructureOfG,
        middle: BundleExpr::StructureOfE,
        quotient: BundleExpr::StructureOfF,
        unknown: Position::Middle,
        citation: GLUING_SEQUENCE,
    }
}

/// Every sequence the engine may use on `b`.
pub fn declared_sequences(b: &ProjBundleData) -> Vec<ExactSeqSpec> {
    vec![relative_euler(b), tangent_sequence(), normal_sequence(), gluing_sequence()]
}
