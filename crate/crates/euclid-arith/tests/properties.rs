//! Property suite for the book VII toolkit.

use euclid_arith::{
    are_relatively_prime, coprime_power_lemma, floor_root_u128, gcd, gcd_subtractive,
    integer_root, mul_repeated, prestet_divisor, reduce, Degree, Natural, Ratio,
};
use proptest::prelude::*;

fn nat(v: u64) -> Natural {
    Natural::try_from(v).unwrap()
}

fn small_natural(max: u64) -> impl Strategy<Value = Natural> {
    (1..=max).prop_map(nat)
}

fn degree() -> impl Strategy<Value = Degree> {
    prop_oneof![Just(Degree::Square), Just(Degree::Cube)]
}

proptest! {
    // The asymmetric m-time addition of n commutes anyway.
    #[test]
    fn mul_repeated_commutes(m in small_natural(300), n in small_natural(300)) {
        prop_assert_eq!(mul_repeated(&m, &n), mul_repeated(&n, &m));
    }

    // Both evaluation strategies (iterated addition, native product) agree,
    // sampled across the threshold.
    #[test]
    fn mul_repeated_matches_native_product(m in 1u64..20_000, n in 1u64..20_000) {
        let (m, n) = (nat(m), nat(n));
        prop_assert_eq!(mul_repeated(&m, &n), &m * &n);
    }

    // Anthyphairesis and the remainder form compute the same measure.
    #[test]
    fn gcd_routes_agree(a in small_natural(5_000), b in small_natural(5_000)) {
        prop_assert_eq!(gcd(&a, &b), gcd_subtractive(&a, &b));
    }

    #[test]
    fn gcd_is_a_common_measure_and_maximal(a in small_natural(100_000), b in small_natural(100_000)) {
        let d = gcd(&a, &b);
        prop_assert!(d.divides(&a));
        prop_assert!(d.divides(&b));
        // After dividing it out nothing common is left.
        let (qa, qb) = (a.div_exact(&d).unwrap(), b.div_exact(&d).unwrap());
        prop_assert!(are_relatively_prime(&qa, &qb));
        prop_assert_eq!(gcd(&a, &b), gcd(&b, &a));
        prop_assert_eq!(gcd(&a, &a), a);
    }

    // Reduction soundness on a sampled sweep.
    #[test]
    fn reduction_is_sound(a in small_natural(500), b in small_natural(500)) {
        let original = Ratio::new(a.clone(), b.clone());
        let w = reduce(&original);
        prop_assert!(are_relatively_prime(w.reduced().num(), w.reduced().den()));
        // Cross-multiplies equal to the original.
        prop_assert_eq!(w.reduced(), &original);
        // Witness factors multiply back exactly and are the same measure.
        prop_assert_eq!(&(w.reduced().num() * w.num_factor()), &a);
        prop_assert_eq!(&(w.reduced().den() * w.den_factor()), &b);
        prop_assert_eq!(w.num_factor(), w.den_factor());
    }

    // VII.27 at both degrees.
    #[test]
    fn coprime_powers_follow_the_bases(a in small_natural(500), b in small_natural(500), e in degree()) {
        prop_assert_eq!(
            coprime_power_lemma(&a, &b, e),
            are_relatively_prime(&a, &b)
        );
    }

    // Exact roots invert exact powers.
    #[test]
    fn integer_root_inverts_powers(k in small_natural(1_000), e in degree()) {
        prop_assert_eq!(integer_root(&k.pow(e.exponent()), e), Some(k));
    }

    // Strictly between consecutive powers there is no root.
    #[test]
    fn integer_root_rejects_non_powers(k in 1u128..1_000_000_000, off in 1u128..100, e in degree()) {
        let gap = (k + 1).pow(e.exponent()) - k.pow(e.exponent());
        let n = k.pow(e.exponent()) + 1 + (off % (gap - 1));
        let n = Natural::try_from(n).unwrap();
        prop_assert_eq!(integer_root(&n, e), None);
        prop_assert_eq!(floor_root_u128(n.to_u128().unwrap(), e), k);
    }
}

// Lowest-terms minimality: no ratio with a smaller denominator
// cross-multiplies equal to a/b. Exhaustive up to 200, with the
// nonexistence check done in plain machine arithmetic.
#[test]
fn lowest_terms_denominator_is_minimal() {
    for a in 1u64..=200 {
        for b in 1u64..=200 {
            let w = reduce(&Ratio::new(nat(a), nat(b)));
            let den = w.reduced().den().to_u64().unwrap();
            for q in 1..den {
                // A p with p/q = a/b needs b | a·q; check none qualifies.
                assert!(
                    (a * q) % b != 0,
                    "{a}/{b} admits denominator {q} below the reduced {den}"
                );
            }
        }
    }
}

// Prestet's lemma over its full precondition domain up to 100.
#[test]
fn prestet_quotient_reconstructs_b() {
    let machine_gcd = |mut x: u64, mut y: u64| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    let mut checked = 0u32;
    for b in 1u64..=100 {
        for c in 1u64..=100 {
            for d in 1u64..=100 {
                if (b * c) % d != 0 || machine_gcd(c, d) != 1 {
                    continue;
                }
                let k = prestet_divisor(&nat(b), &nat(c), &nat(d)).expect("preconditions hold");
                assert_eq!(&nat(d) * &k, nat(b), "b={b} c={c} d={d}");
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000, "precondition domain unexpectedly small: {checked}");
}
