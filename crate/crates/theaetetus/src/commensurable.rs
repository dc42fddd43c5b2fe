//! Commensurability of two square roots, and the audit of the partition.
//!
//! Elements X.9, taken on the arithmetic side: `sqrt(a)` and `sqrt(b)` are
//! commensurable in length exactly when `a : b` is a ratio of square
//! numbers. The decision reduces `a/b` and tests both least terms for
//! exact square roots; the brute-force oracle crate confirms the verdicts
//! independently, since the classical proof of the ratio-squaring step is
//! not itself reproduced here.

use euclid_arith::{integer_root, reduce, Degree, Natural, Ratio};
use serde::{Deserialize, Serialize};

use crate::rationality::{classify_line, LineKind};
use crate::surd::Surd;

/// Verdict on `sqrt(a) : sqrt(b)`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommensurabilityVerdict {
    /// `sqrt(a) : sqrt(b) = ratio`, a ratio of naturals.
    Commensurable { ratio: Ratio },
    /// No ratio of naturals equals `sqrt(a) : sqrt(b)`; the witness is the
    /// reduced radicand ratio, at least one of whose terms is non-square.
    Incommensurable { witness: Ratio },
}

/// Decides commensurability of `sqrt(a)` with `sqrt(b)`.
///
/// On the commensurable branch the defining identity `a·q² = b·p²` is
/// re-checked exactly before the verdict is returned.
pub fn surd_ratio_commensurable(a: &Natural, b: &Natural) -> CommensurabilityVerdict {
    let witness = reduce(&Ratio::new(a.clone(), b.clone()));
    let reduced = witness.reduced();
    let num_root = integer_root(reduced.num(), Degree::Square);
    let den_root = integer_root(reduced.den(), Degree::Square);
    match (num_root, den_root) {
        (Some(p), Some(q)) => {
            assert_eq!(
                a * &q.pow(2),
                b * &p.pow(2),
                "X.9 witness identity failed for {a}:{b}",
            );
            CommensurabilityVerdict::Commensurable {
                ratio: Ratio::new(p, q),
            }
        }
        _ => CommensurabilityVerdict::Incommensurable {
            witness: reduced.clone(),
        },
    }
}

/// The audit of one pair `(sqrt(a), sqrt(b))`: each side's line kind, the
/// mutual commensurability verdict, and the gap flag.
///
/// The flag is raised when both lines are powers yet commensurable with one
/// another — pairs such as `sqrt(8) : sqrt(2) = 2` that the length/power
/// partition has no class for, the classical objection to treating the
/// partition as exhausting commensurability.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PartitionAudit {
    left: Surd,
    right: Surd,
    left_kind: LineKind,
    right_kind: LineKind,
    relation: CommensurabilityVerdict,
    gap: bool,
}

impl PartitionAudit {
    pub fn left(&self) -> &Surd {
        &self.left
    }

    pub fn right(&self) -> &Surd {
        &self.right
    }

    pub fn left_kind(&self) -> LineKind {
        self.left_kind
    }

    pub fn right_kind(&self) -> LineKind {
        self.right_kind
    }

    pub fn relation(&self) -> &CommensurabilityVerdict {
        &self.relation
    }

    pub fn gap(&self) -> bool {
        self.gap
    }
}

/// Audits the pair `(sqrt(a), sqrt(b))` against the partition.
pub fn partition_audit(a: &Natural, b: &Natural) -> PartitionAudit {
    let left = Surd::sqrt(a.clone());
    let right = Surd::sqrt(b.clone());
    let left_kind = classify_line(&left);
    let right_kind = classify_line(&right);
    let relation = surd_ratio_commensurable(a, b);
    let gap = left_kind == LineKind::Power
        && right_kind == LineKind::Power
        && matches!(relation, CommensurabilityVerdict::Commensurable { .. });
    PartitionAudit {
        left,
        right,
        left_kind,
        right_kind,
        relation,
        gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    fn ratio(n: u64, d: u64) -> Ratio {
        Ratio::new(nat(n), nat(d))
    }

    fn commensurable(n: u64, d: u64) -> CommensurabilityVerdict {
        CommensurabilityVerdict::Commensurable { ratio: ratio(n, d) }
    }

    #[test]
    fn sqrt8_to_sqrt2_is_two_to_one() {
        assert_eq!(surd_ratio_commensurable(&nat(8), &nat(2)), commensurable(2, 1));
    }

    #[test]
    fn nine_to_four_is_three_to_two() {
        assert_eq!(surd_ratio_commensurable(&nat(9), &nat(4)), commensurable(3, 2));
    }

    #[test]
    fn two_to_three_is_incommensurable_with_reduced_witness() {
        match surd_ratio_commensurable(&nat(2), &nat(3)) {
            CommensurabilityVerdict::Incommensurable { witness } => {
                assert!(witness.same_terms(&ratio(2, 3)));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn every_root_is_commensurable_with_itself() {
        for n in [1u64, 2, 17, 360] {
            assert_eq!(surd_ratio_commensurable(&nat(n), &nat(n)), commensurable(1, 1));
        }
    }

    #[test]
    fn audit_of_8_and_2_raises_the_gap_flag() {
        let audit = partition_audit(&nat(8), &nat(2));
        assert_eq!(audit.left_kind(), LineKind::Power);
        assert_eq!(audit.right_kind(), LineKind::Power);
        assert_eq!(audit.relation(), &commensurable(2, 1));
        assert!(audit.gap());
    }

    #[test]
    fn audit_of_4_and_9_is_two_lengths_no_flag() {
        let audit = partition_audit(&nat(4), &nat(9));
        assert_eq!(audit.left_kind(), LineKind::Length);
        assert_eq!(audit.right_kind(), LineKind::Length);
        assert_eq!(audit.relation(), &commensurable(2, 3));
        assert!(!audit.gap());
    }

    #[test]
    fn audit_of_2_and_3_is_two_powers_incommensurable_no_flag() {
        let audit = partition_audit(&nat(2), &nat(3));
        assert_eq!(audit.left_kind(), LineKind::Power);
        assert_eq!(audit.right_kind(), LineKind::Power);
        assert!(matches!(
            audit.relation(),
            CommensurabilityVerdict::Incommensurable { .. }
        ));
        assert!(!audit.gap());
    }
}
