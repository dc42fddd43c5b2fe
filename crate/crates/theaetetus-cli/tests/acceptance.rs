//! Acceptance suite. One test per criterion; each prints a PASS line when
//! it holds (run with `--nocapture` to see them) and fails the build
//! otherwise. Sweeps are exhaustive over their stated ranges.

use std::time::Instant;

use euclid_arith::{
    are_relatively_prime, coprime_power_lemma, floor_root_u128, mul_repeated, reduce, Degree,
    Natural, Ratio,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use surd_oracle::{oracle_root_rational, oracle_surd_ratio};
use theaetetus::{
    classify_line, decide_rationality, partition_audit, power_count, surd_ratio_commensurable,
    CommensurabilityVerdict, LineKind, ProofTrace, RationalityVerdict, Surd,
};

fn nat(v: u64) -> Natural {
    Natural::try_from(v).unwrap()
}

/// Criterion 1: decide_rationality agrees with the brute-force oracle
/// (q bound 10^3) for every n in 1..=10^4 at degree 2 and degree 3,
/// with zero mismatches, in under 60 seconds.
#[test]
fn criterion_1_equivalence2_sweep() {
    let started = Instant::now();
    let q_bound = nat(1_000);
    for degree in [Degree::Square, Degree::Cube] {
        let mismatches: Vec<u64> = (1u64..=10_000)
            .into_par_iter()
            .filter(|&n| {
                let verdict = decide_rationality(&Surd::new(nat(n), degree));
                let oracle = oracle_root_rational(&nat(n), degree, &q_bound);
                let agrees = match (&verdict, &oracle.found) {
                    (RationalityVerdict::RationalInteger(k), Some(w)) => {
                        k == &w.p && w.q.is_one()
                    }
                    (RationalityVerdict::Irrational(_), None) => true,
                    _ => false,
                };
                !agrees
            })
            .collect();
        assert!(
            mismatches.is_empty(),
            "degree {degree}: oracle disagreements at n = {mismatches:?}"
        );
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "PASS criterion 1: equivalence-2 sweep, n <= 10^4, degrees 2 and 3, zero mismatches in {elapsed:?}"
    );
}

/// Criterion 2: over the lesson's range 2..=17, exactly the non-squares
/// are powers and {4, 9, 16} are lengths.
#[test]
fn criterion_2_theodorus_range() {
    let expected_powers = [2u64, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17];
    let expected_lengths = [4u64, 9, 16];
    for n in 2..=17u64 {
        let kind = classify_line(&Surd::sqrt(nat(n)));
        let expected = if expected_powers.contains(&n) {
            LineKind::Power
        } else {
            LineKind::Length
        };
        assert_eq!(kind, expected, "sqrt({n})");
        if expected_lengths.contains(&n) {
            assert_eq!(kind, LineKind::Length);
        }
    }
    println!("PASS criterion 2: Theodorus range 2..=17 splits into the expected powers and lengths");
}

/// Criterion 3: the coprime-powers lemma holds for every pair a, b <= 500
/// at both degrees, with zero violations.
#[test]
fn criterion_3_coprime_powers_exhaustive() {
    for degree in [Degree::Square, Degree::Cube] {
        let violations: Vec<(u64, u64)> = (1u64..=500)
            .into_par_iter()
            .flat_map_iter(|a| (1u64..=500).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                coprime_power_lemma(&nat(a), &nat(b), degree)
                    != are_relatively_prime(&nat(a), &nat(b))
            })
            .collect();
        assert!(violations.is_empty(), "degree {degree}: {violations:?}");
    }
    println!("PASS criterion 3: coprime-powers lemma exhaustive for a, b <= 500 at degrees 2 and 3");
}

/// Criterion 4: for every a, b <= 500 the reduction witness has coprime
/// least terms whose factors reconstruct a and b exactly.
#[test]
fn criterion_4_fundamental_result_witnesses() {
    let failures: Vec<(u64, u64)> = (1u64..=500)
        .into_par_iter()
        .flat_map_iter(|a| (1u64..=500).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let w = reduce(&Ratio::new(nat(a), nat(b)));
            let coprime = are_relatively_prime(w.reduced().num(), w.reduced().den());
            let reconstructs = w.reduced().num() * w.num_factor() == nat(a)
                && w.reduced().den() * w.den_factor() == nat(b)
                && w.num_factor() == w.den_factor();
            !(coprime && reconstructs)
        })
        .collect();
    assert!(failures.is_empty(), "witness failures at {failures:?}");
    println!("PASS criterion 4: reduction witnesses reconstruct every a, b <= 500");
}

/// Criterion 5: the audit of (8, 2) raises the gap flag with ratio 2/1;
/// the audit of (2, 3) does not raise it.
#[test]
fn criterion_5_pappus_gap() {
    let audit = partition_audit(&nat(8), &nat(2));
    assert!(audit.gap());
    match audit.relation() {
        CommensurabilityVerdict::Commensurable { ratio } => {
            assert!(ratio.same_terms(&Ratio::new(nat(2), nat(1))));
        }
        other => panic!("audit(8, 2) relation unexpectedly {other:?}"),
    }
    let audit = partition_audit(&nat(2), &nat(3));
    assert!(!audit.gap());
    assert!(matches!(
        audit.relation(),
        CommensurabilityVerdict::Incommensurable { .. }
    ));
    println!("PASS criterion 5: gap flag raised for (8, 2) with ratio 2/1 and not for (2, 3)");
}

/// Criterion 6: the X.9 decision agrees with the ratio oracle (bound 10^3)
/// for all a, b <= 300, and commensurable verdicts satisfy a·q² = b·p²
/// exactly.
#[test]
fn criterion_6_x9_sweep() {
    let bound = nat(1_000);
    let mismatches: Vec<(u64, u64)> = (1u64..=300)
        .into_par_iter()
        .flat_map_iter(|a| (1u64..=300).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let verdict = surd_ratio_commensurable(&nat(a), &nat(b));
            let oracle = oracle_surd_ratio(&nat(a), &nat(b), &bound);
            let agrees = match (&verdict, &oracle.found) {
                (CommensurabilityVerdict::Commensurable { ratio }, Some(w)) => {
                    let identity = &nat(a) * &w.q.pow(2) == &nat(b) * &w.p.pow(2);
                    ratio.num() == &w.p && ratio.den() == &w.q && identity
                }
                (CommensurabilityVerdict::Incommensurable { .. }, None) => true,
                _ => false,
            };
            !agrees
        })
        .collect();
    assert!(mismatches.is_empty(), "X.9 disagreements at {mismatches:?}");
    println!("PASS criterion 6: X.9 sweep a, b <= 300 agrees with the oracle at bound 10^3");
}

/// Criterion 7: proof traces for 100 randomly chosen non-squares replay
/// step by step, and the trace for n = 2 matches the golden file.
#[test]
fn criterion_7_trace_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(148);
    let mut checked = 0;
    while checked < 100 {
        let n: u64 = rng.random_range(2..=10_000);
        if floor_root_u128(u128::from(n), Degree::Square).pow(2) == u128::from(n) {
            continue;
        }
        match decide_rationality(&Surd::sqrt(nat(n))) {
            RationalityVerdict::Irrational(trace) => {
                trace.replay().unwrap_or_else(|e| panic!("sqrt({n}): {e}"));
            }
            RationalityVerdict::RationalInteger(k) => {
                panic!("sqrt({n}) is not rational, got root {k}")
            }
        }
        checked += 1;
    }
    let golden = include_str!("../../theaetetus/tests/golden/trace_sqrt2.txt");
    let trace = ProofTrace::derive(&Surd::sqrt(nat(2)));
    assert_eq!(format!("{trace}\n"), golden);
    println!("PASS criterion 7: 100 random traces replay; sqrt(2) trace matches the golden file");
}

/// Criterion 8: whenever the oracle finds p, q with p² = n·q² for
/// n <= 10^4, the pair is (an integer multiple of) a unit-denominator
/// ratio: q = 1 and the lowest-terms denominator is 1.
#[test]
fn criterion_8_unit_denominator() {
    let q_bound = nat(1_000);
    let offenders: Vec<u64> = (1u64..=10_000)
        .into_par_iter()
        .filter(|&n| {
            match oracle_root_rational(&nat(n), Degree::Square, &q_bound).found {
                Some(w) => {
                    let reduced = reduce(&Ratio::new(w.p.clone(), w.q.clone()));
                    !(w.q.is_one() && reduced.reduced().den().is_one())
                }
                None => false,
            }
        })
        .collect();
    assert!(offenders.is_empty(), "non-unit denominators at n = {offenders:?}");
    println!("PASS criterion 8: every oracle witness for n <= 10^4 has lowest-terms denominator 1");
}

/// Criterion 9: repeated-addition multiplication commutes for all
/// m, n <= 200, and power_count matches direct enumeration for max <= 10^4.
#[test]
fn criterion_9_commutativity_and_counting() {
    let bad_pairs: Vec<(u64, u64)> = (1u64..=200)
        .into_par_iter()
        .flat_map_iter(|m| (1u64..=200).map(move |n| (m, n)))
        .filter(|&(m, n)| mul_repeated(&nat(m), &nat(n)) != mul_repeated(&nat(n), &nat(m)))
        .collect();
    assert!(bad_pairs.is_empty(), "commutativity failures at {bad_pairs:?}");

    let mut enumerated = 0u64;
    for max in 1u64..=10_000 {
        let root = floor_root_u128(u128::from(max), Degree::Square) as u64;
        if root * root != max {
            enumerated += 1;
        }
        assert_eq!(
            power_count(&nat(max)),
            enumerated.into(),
            "power_count({max})"
        );
        assert_eq!(power_count(&nat(max)), (max - root).into(), "closed form at {max}");
    }
    println!("PASS criterion 9: mul_repeated commutes for m, n <= 200; power_count matches enumeration to 10^4");
}
