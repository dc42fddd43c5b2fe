//! Deciding whether a root is rational, and the length/power split.
//!
//! Two superficially similar statements are deliberately kept as two
//! separate procedures. [`equivalence1_check`] decides "the root of `n` is
//! a *natural*" — a bare root test, no theory needed. [`decide_rationality`]
//! decides "the root of `n` is *rational*", which sounds the same and is
//! not: ruling out a fractional root takes the relatively-prime machinery,
//! and the emitted trace walks exactly that argument. The two agree on
//! every verdict; only their certificates differ.

use euclid_arith::{integer_root, Degree, Natural};
use serde::{Deserialize, Serialize};

use crate::surd::Surd;
use crate::trace::{ProofTrace, TraceConclusion};

/// Verdict of [`decide_rationality`].
///
/// There is no rational-non-integer variant: the trace proves that case
/// empty. A root of a natural is either a natural or irrational.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RationalityVerdict {
    /// The root is the natural carried here.
    RationalInteger(Natural),
    /// No rational root exists; the trace derives the contradiction.
    Irrational(ProofTrace),
}

/// Decides whether `root(n)` is rational, with a full derivation for the
/// irrational case.
pub fn decide_rationality(surd: &Surd) -> RationalityVerdict {
    let trace = ProofTrace::derive(surd);
    match trace.conclusion() {
        TraceConclusion::PerfectPower { root } => RationalityVerdict::RationalInteger(root.clone()),
        TraceConclusion::Irrational => RationalityVerdict::Irrational(trace),
    }
}

/// The trivial equivalence: `root(n)` is a natural iff `n` is a perfect
/// power of the degree. Decided by the root test alone — no coprimality
/// lemma anywhere on this path — and checked in both directions (a found
/// root is raised back to the radicand before being believed).
pub fn equivalence1_check(n: &Natural, degree: Degree) -> bool {
    match integer_root(n, degree) {
        Some(k) => {
            assert_eq!(&k.pow(degree.exponent()), n, "root test returned a non-root");
            true
        }
        None => false,
    }
}

/// The two kinds of line the partition names.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    /// Commensurable with the unit: the root is itself a natural.
    Length,
    /// Incommensurable as a length, commensurable only through the square
    /// or cube it has the power to produce.
    Power,
}

impl std::fmt::Display for LineKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineKind::Length => write!(f, "length"),
            LineKind::Power => write!(f, "power"),
        }
    }
}

/// Names the line for `surd`: a length when its root is rational, a power
/// otherwise. Either way the line is commensurable "as areas": its `e`-th
/// power is the radicand, a natural — asserted here for the length branch
/// by raising the root back.
pub fn classify_line(surd: &Surd) -> LineKind {
    match decide_rationality(surd) {
        RationalityVerdict::RationalInteger(k) => {
            assert_eq!(
                &k.pow(surd.degree().exponent()),
                surd.produced_power(),
                "length root does not produce the radicand"
            );
            LineKind::Length
        }
        RationalityVerdict::Irrational(_) => LineKind::Power,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(
            decide_rationality(&Surd::sqrt(nat(9))),
            RationalityVerdict::RationalInteger(nat(3))
        );
        assert!(matches!(
            decide_rationality(&Surd::sqrt(nat(2))),
            RationalityVerdict::Irrational(_)
        ));
        assert!(matches!(
            decide_rationality(&Surd::cbrt(nat(3))),
            RationalityVerdict::Irrational(_)
        ));
        assert!(matches!(
            decide_rationality(&Surd::sqrt(nat(17))),
            RationalityVerdict::Irrational(_)
        ));
    }

    #[test]
    fn irrational_verdicts_carry_replayable_traces() {
        for n in [2u64, 3, 5, 17, 99] {
            match decide_rationality(&Surd::sqrt(nat(n))) {
                RationalityVerdict::Irrational(trace) => trace.replay().unwrap(),
                other => panic!("sqrt({n}) unexpectedly {other:?}"),
            }
        }
    }

    #[test]
    fn equivalence1_examples() {
        assert!(equivalence1_check(&nat(9), Degree::Square));
        assert!(!equivalence1_check(&nat(2), Degree::Square));
        assert!(equivalence1_check(&nat(1), Degree::Cube));
    }

    #[test]
    fn both_equivalences_agree_on_every_verdict() {
        for n in 1..=2_000u64 {
            for degree in [Degree::Square, Degree::Cube] {
                let trivial = equivalence1_check(&nat(n), degree);
                let full = matches!(
                    decide_rationality(&Surd::new(nat(n), degree)),
                    RationalityVerdict::RationalInteger(_)
                );
                assert_eq!(trivial, full, "n={n} degree={degree}");
            }
        }
    }

    #[test]
    fn line_examples() {
        assert_eq!(classify_line(&Surd::sqrt(nat(4))), LineKind::Length);
        assert_eq!(classify_line(&Surd::sqrt(nat(3))), LineKind::Power);
        assert_eq!(classify_line(&Surd::cbrt(nat(8))), LineKind::Length);
    }

    #[test]
    fn theodorus_range() {
        let powers: Vec<u64> = (2..=17u64)
            .filter(|&n| classify_line(&Surd::sqrt(nat(n))) == LineKind::Power)
            .collect();
        assert_eq!(powers, vec![2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17]);
    }

    #[test]
    fn integer_lines_are_lengths_in_plane_and_solid() {
        for n in 1..=300u64 {
            assert_eq!(classify_line(&Surd::sqrt(nat(n).pow(2))), LineKind::Length);
            assert_eq!(classify_line(&Surd::cbrt(nat(n).pow(3))), LineKind::Length);
        }
    }
}
