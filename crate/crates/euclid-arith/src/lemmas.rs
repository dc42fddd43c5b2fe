//! The two arithmetic lemmas the irrationality argument stands on.
//!
//! Proposition VII.27: powers of relatively prime naturals are again
//! relatively prime (squares and, by its second part, cubes).
//!
//! Prestet's lemma, the ancestor of the modern Gauss lemma: when `d`
//! measures the product `b·c` and is prime to `c`, then `d` measures `b`.

use std::fmt;

use crate::gcd::{are_relatively_prime, gcd};
use crate::natural::Natural;
use crate::root::Degree;

/// Whether `a^e` and `b^e` are relatively prime.
///
/// Proposition VII.27 asserts this holds exactly when `a` and `b` are
/// relatively prime; the function recomputes both sides and insists they
/// match, so a disagreement aborts rather than returning a wrong answer.
pub fn coprime_power_lemma(a: &Natural, b: &Natural, degree: Degree) -> bool {
    let e = degree.exponent();
    let bases_coprime = are_relatively_prime(a, b);
    let powers_coprime = are_relatively_prime(&a.pow(e), &b.pow(e));
    assert_eq!(
        bases_coprime, powers_coprime,
        "coprime-powers lemma violated for a={a}, b={b}, degree={degree}",
    );
    powers_coprime
}

/// Precondition failures of [`prestet_divisor`], reported as contract
/// errors rather than wrong answers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrestetError {
    /// `d` does not measure `b·c`.
    NotADivisorOfProduct {
        product: Natural,
        divisor: Natural,
    },
    /// `c` and `d` share a measure greater than the unit.
    SharedMeasure {
        c: Natural,
        d: Natural,
        common: Natural,
    },
}

impl fmt::Display for PrestetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrestetError::NotADivisorOfProduct { product, divisor } => {
                write!(f, "{divisor} does not measure the product {product}")
            }
            PrestetError::SharedMeasure { c, d, common } => {
                write!(f, "{c} and {d} are not relatively prime ({common} measures both)")
            }
        }
    }
}

impl std::error::Error for PrestetError {}

/// Given `d` measuring `b·c` with `c` and `d` relatively prime, returns the
/// quotient `k` with `b = d·k`, witnessing that `d` measures `b` itself.
pub fn prestet_divisor(b: &Natural, c: &Natural, d: &Natural) -> Result<Natural, PrestetError> {
    let product = b * c;
    if !d.divides(&product) {
        return Err(PrestetError::NotADivisorOfProduct {
            product,
            divisor: d.clone(),
        });
    }
    let common = gcd(c, d);
    if !common.is_one() {
        return Err(PrestetError::SharedMeasure {
            c: c.clone(),
            d: d.clone(),
            common,
        });
    }
    // The lemma guarantees divisibility; failure here would be an
    // arithmetic impossibility, not an input error.
    Ok(b.div_exact(d).expect("d measures b when the preconditions hold"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    #[test]
    fn coprime_powers_examples() {
        // 3 and 10 are relatively prime, so 9 and 100 are.
        assert!(coprime_power_lemma(&nat(3), &nat(10), Degree::Square));
        // 4 and 10 share 2; gcd(16, 100) = 4.
        assert!(!coprime_power_lemma(&nat(4), &nat(10), Degree::Square));
        // gcd(8, 27) = 1.
        assert!(coprime_power_lemma(&nat(2), &nat(3), Degree::Cube));
    }

    #[test]
    fn prestet_examples() {
        // 3 measures 30 and is prime to 5, so 3 measures 6; quotient 2.
        assert_eq!(prestet_divisor(&nat(6), &nat(5), &nat(3)), Ok(nat(2)));
        // 2 measures 36 and is prime to 9, so 2 measures 4; quotient 2.
        assert_eq!(prestet_divisor(&nat(4), &nat(9), &nat(2)), Ok(nat(2)));
    }

    #[test]
    fn unit_divisor_returns_b() {
        for (b, c) in [(7u64, 4), (12, 35), (1, 1)] {
            assert_eq!(prestet_divisor(&nat(b), &nat(c), &nat(1)), Ok(nat(b)));
        }
    }

    #[test]
    fn precondition_violations_are_distinct_errors() {
        // 7 does not measure 6·5 = 30.
        assert_eq!(
            prestet_divisor(&nat(6), &nat(5), &nat(7)),
            Err(PrestetError::NotADivisorOfProduct {
                product: nat(30),
                divisor: nat(7),
            })
        );
        // 6 measures 4·9 = 36 but shares the measure 3 with 9.
        assert_eq!(
            prestet_divisor(&nat(4), &nat(9), &nat(6)),
            Err(PrestetError::SharedMeasure {
                c: nat(9),
                d: nat(6),
                common: nat(3),
            })
        );
    }
}
