//! Ratios of naturals and lowest-terms reduction with witnesses.
//!
//! Reduction packages the content of propositions VII.20–22: every ratio of
//! naturals equals a unique ratio in least terms, the least terms are the
//! relatively prime ones, and each least term divides the corresponding
//! original. The witness carries those divisibility factors explicitly so
//! callers (and tests) can multiply everything back.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gcd::gcd;
use crate::natural::Natural;

/// An ordered pair of naturals, `num : den`.
///
/// Equality is cross-multiplication equality — `a/b == c/d` iff
/// `a·d == b·c` — which is why `Hash` is deliberately not implemented.
#[derive(Clone, Eq, Debug, Serialize, Deserialize)]
pub struct Ratio {
    num: Natural,
    den: Natural,
}

impl Ratio {
    pub fn new(num: Natural, den: Natural) -> Self {
        Ratio { num, den }
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    /// Structural identity of numerator and denominator, as opposed to the
    /// cross-multiplication equality of `==`.
    pub fn same_terms(&self, other: &Ratio) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &self.den * &other.num
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The outcome of reducing a ratio to lowest terms, together with the
/// factors that reconstruct the original.
///
/// Invariants, guaranteed by construction:
/// - `reduced` has relatively prime terms;
/// - `original.num = reduced.num · num_factor` and likewise for the
///   denominator;
/// - `num_factor = den_factor` — both are the common measure.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReductionWitness {
    original: Ratio,
    reduced: Ratio,
    num_factor: Natural,
    den_factor: Natural,
}

impl ReductionWitness {
    pub fn original(&self) -> &Ratio {
        &self.original
    }

    pub fn reduced(&self) -> &Ratio {
        &self.reduced
    }

    pub fn num_factor(&self) -> &Natural {
        &self.num_factor
    }

    pub fn den_factor(&self) -> &Natural {
        &self.den_factor
    }

    /// The common measure; equal to both factors.
    pub fn common_measure(&self) -> &Natural {
        &self.num_factor
    }
}

/// Reduces a ratio to its unique lowest-terms form.
pub fn reduce(ratio: &Ratio) -> ReductionWitness {
    let g = gcd(&ratio.num, &ratio.den);
    let num = ratio.num.div_exact(&g).expect("gcd measures the numerator");
    let den = ratio.den.div_exact(&g).expect("gcd measures the denominator");
    ReductionWitness {
        original: ratio.clone(),
        reduced: Ratio::new(num, den),
        num_factor: g.clone(),
        den_factor: g,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcd::are_relatively_prime;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    fn ratio(n: u64, d: u64) -> Ratio {
        Ratio::new(nat(n), nat(d))
    }

    #[test]
    fn four_tenths_reduces_to_two_fifths() {
        let w = reduce(&ratio(4, 10));
        assert!(w.reduced().same_terms(&ratio(2, 5)));
        assert_eq!(w.num_factor(), &nat(2));
        assert_eq!(w.den_factor(), &nat(2));
    }

    #[test]
    fn three_tenths_is_already_reduced() {
        let w = reduce(&ratio(3, 10));
        assert!(w.reduced().same_terms(&ratio(3, 10)));
        assert_eq!(w.common_measure(), &nat(1));
    }

    #[test]
    fn nine_thirds_reduces_to_three_over_one() {
        let w = reduce(&ratio(9, 3));
        assert!(w.reduced().same_terms(&ratio(3, 1)));
        assert_eq!(w.common_measure(), &nat(3));
    }

    #[test]
    fn witness_reconstructs_the_original() {
        for (a, b) in [(4u64, 10), (3, 10), (9, 3), (360, 84), (1, 1)] {
            let w = reduce(&ratio(a, b));
            assert!(are_relatively_prime(w.reduced().num(), w.reduced().den()));
            assert_eq!(&(w.reduced().num() * w.num_factor()), &nat(a));
            assert_eq!(&(w.reduced().den() * w.den_factor()), &nat(b));
            assert_eq!(w.num_factor(), w.den_factor());
            assert_eq!(w.original(), w.reduced());
        }
    }

    #[test]
    fn equality_is_cross_multiplication() {
        assert_eq!(ratio(4, 10), ratio(2, 5));
        assert_eq!(ratio(2, 5), ratio(4, 10));
        assert_ne!(ratio(2, 5), ratio(3, 5));
        assert!(!ratio(4, 10).same_terms(&ratio(2, 5)));
    }
}
