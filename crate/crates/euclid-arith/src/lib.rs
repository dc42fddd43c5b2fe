//! Exact arithmetic over the ancient domain: positive whole numbers only.
//!
//! Everything here is built from the book VII toolkit — repeated-addition
//! multiplication, the common measure (gcd), relatively-prime tests,
//! lowest-terms reduction with divisibility witnesses, and the two lemmas
//! (coprime powers, Prestet's divisor lemma) that the irrationality
//! arguments in the `theaetetus` crate lean on.
//!
//! There is no zero, no sign, and no floating point anywhere in the crate.

pub mod gcd;
pub mod lemmas;
pub mod mul;
pub mod natural;
pub mod ratio;
pub mod root;

pub use gcd::{are_relatively_prime, gcd, gcd_subtractive};
pub use lemmas::{coprime_power_lemma, prestet_divisor, PrestetError};
pub use mul::{mul_repeated, REPEATED_ADDITION_THRESHOLD};
pub use natural::{Natural, ParseNaturalError, ZeroNatural};
pub use ratio::{reduce, Ratio, ReductionWitness};
pub use root::{floor_root, floor_root_u128, integer_root, integer_root_u128, Degree, DegreeError};
