//! The partition of "the integer in its totality" and what follows from it.
//!
//! Plane integers split into square-equilateral and oblong, solids into
//! cube and parallelepipedal. Lines whose square (or cube) is a natural
//! split into lengths and powers. The crate decides, with exact arithmetic
//! only:
//!
//! - whether the square or cube root of a natural is rational, emitting a
//!   replayable six-step proof trace for the irrational case;
//! - whether two square roots are commensurable with one another (the
//!   squares-to-squares criterion of Elements X.9);
//! - whether a pair of roots exposes the gap in the length/power partition
//!   (mutually commensurable powers, the classical counterexample being
//!   sqrt(8) : sqrt(2) = 2).
//!
//! Brute-force cross-checks live in the separate `surd-oracle` crate so the
//! two codepaths stay independent.

pub mod classify;
pub mod commensurable;
pub mod rationality;
pub mod surd;
pub mod trace;

pub use classify::{
    classification_table, classify_plane, classify_solid, oblong_factorizations, power_count,
    ClassificationTable, PlaneClass, SolidClass, TableRow,
};
pub use commensurable::{partition_audit, surd_ratio_commensurable, CommensurabilityVerdict, PartitionAudit};
pub use rationality::{classify_line, decide_rationality, equivalence1_check, LineKind, RationalityVerdict};
pub use surd::Surd;
pub use trace::{ProofTrace, ReplayError, TraceConclusion, TraceStep};
