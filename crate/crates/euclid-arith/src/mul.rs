//! Multiplication as definition VII.15 gives it: `m` times `n` is `n` added
//! to itself as many times as there are units in `m`.
//!
//! The definition is asymmetric — "twice 3" is 3 + 3, while "thrice 2" is
//! 2 + 2 + 2 — and commutativity of the result is a fact to be checked, not
//! something the construction hands us. The tests and the acceptance suite
//! verify it on a sweep.

use crate::natural::Natural;

/// Largest repetition count evaluated by actual iterated addition. Above
/// it, `mul_repeated` switches to the native product; the property suite
/// pins equality of the two paths at this boundary.
pub const REPEATED_ADDITION_THRESHOLD: u64 = 4096;

/// The sum of `m` copies of `n`.
pub fn mul_repeated(m: &Natural, n: &Natural) -> Natural {
    match m.to_u64() {
        Some(count) if count <= REPEATED_ADDITION_THRESHOLD => {
            let mut acc = n.clone();
            for _ in 1..count {
                acc += n;
            }
            acc
        }
        _ => m * n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::try_from(v).unwrap()
    }

    #[test]
    fn once_twice_thrice() {
        // once 2, twice 3, thrice 4.
        assert_eq!(mul_repeated(&nat(1), &nat(2)), nat(2));
        assert_eq!(mul_repeated(&nat(2), &nat(3)), nat(6));
        assert_eq!(mul_repeated(&nat(3), &nat(4)), nat(12));
    }

    #[test]
    fn one_times_n_is_n() {
        for n in [1u64, 2, 17, 1000, 65537] {
            assert_eq!(mul_repeated(&nat(1), &nat(n)), nat(n));
        }
    }

    #[test]
    fn matches_native_product_at_the_threshold() {
        for m in [
            REPEATED_ADDITION_THRESHOLD - 1,
            REPEATED_ADDITION_THRESHOLD,
            REPEATED_ADDITION_THRESHOLD + 1,
        ] {
            for n in [1u64, 7, 360] {
                let expected = &nat(m) * &nat(n);
                assert_eq!(mul_repeated(&nat(m), &nat(n)), expected);
                assert_eq!(mul_repeated(&nat(n), &nat(m)), expected);
            }
        }
    }

    #[test]
    fn huge_repetition_count_takes_the_native_path() {
        let m: Natural = "340282366920938463463374607431768211457".parse().unwrap();
        assert_eq!(mul_repeated(&m, &nat(3)), &m * &nat(3));
    }
}
