//! Exhaustive witness searches, kept deliberately naive.
//!
//! These scans are the ground truth the decision procedures in `theaetetus`
//! are checked against, so they share nothing with them beyond the exact
//! `integer_root` primitive. An empty result is evidence only up to its
//! bound, which is why every result carries the bound it searched.
//!
//! Every returned witness is re-checked against its defining identity in
//! exact arbitrary-precision arithmetic before it leaves the crate.

use euclid_arith::{integer_root, integer_root_u128, Degree, Natural};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A witness pair `(p, q)` for one of the two search identities.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub p: Natural,
    pub q: Natural,
}

/// Outcome of a bounded exhaustive search.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct OracleResult {
    /// First witness in scan order, if any exists within the bound.
    pub found: Option<Witness>,
    /// Every `q` up to this bound was examined when `found` is `None`.
    pub search_bound: Natural,
}

impl OracleResult {
    fn new(found: Option<(Natural, Natural)>, search_bound: &Natural) -> Self {
        OracleResult {
            found: found.map(|(p, q)| Witness { p, q }),
            search_bound: search_bound.clone(),
        }
    }
}

/// Searches for naturals `p, q` with `p^e = n·q^e`, scanning `q` upward
/// from 1 and testing each `n·q^e` for an exact `e`-th root.
///
/// The first witness (least `q`) is returned. Such a witness asserts that
/// the `e`-th root of `n` is the ratio `p/q`.
pub fn oracle_root_rational(n: &Natural, degree: Degree, q_bound: &Natural) -> OracleResult {
    let e = degree.exponent();
    let found = match root_scan_fits_u128(n, q_bound, e) {
        Some((n_small, bound_small)) => (1..=bound_small)
            .find_map(|q| {
                let target = n_small * q.pow(e);
                integer_root_u128(target, degree).map(|p| (from_u128(p), from_u128(q)))
            }),
        None => {
            let mut q = Natural::one();
            let mut hit = None;
            while &q <= q_bound {
                let target = n * &q.pow(e);
                if let Some(p) = integer_root(&target, degree) {
                    hit = Some((p, q));
                    break;
                }
                q += &Natural::one();
            }
            hit
        }
    };
    if let Some((p, q)) = &found {
        check_root_witness(n, degree, p, q);
    }
    OracleResult::new(found, q_bound)
}

/// [`oracle_root_rational`] with the `q`-range sharded across worker
/// threads. Shards merge to the least `q`, so the result is identical to
/// the sequential scan. Falls back to the sequential scan when the bound
/// does not fit a machine word.
pub fn oracle_root_rational_sharded(n: &Natural, degree: Degree, q_bound: &Natural) -> OracleResult {
    let e = degree.exponent();
    match root_scan_fits_u128(n, q_bound, e) {
        Some((n_small, bound_small)) if bound_small <= u128::from(u64::MAX) => {
            let found = (1..=bound_small as u64)
                .into_par_iter()
                .find_map_first(|q| {
                    let target = n_small * u128::from(q).pow(e);
                    integer_root_u128(target, degree)
                        .map(|p| (from_u128(p), from_u128(u128::from(q))))
                });
            if let Some((p, q)) = &found {
                check_root_witness(n, degree, p, q);
            }
            OracleResult::new(found, q_bound)
        }
        _ => oracle_root_rational(n, degree, q_bound),
    }
}

/// Searches for naturals `p, q <= bound` with `a·q² = b·p²`, in
/// lexicographic `(q, p)` order.
///
/// A witness asserts `sqrt(a) : sqrt(b) = p : q`. For each `q` at most one
/// `p` can satisfy the identity, so the scan resolves `p` directly by an
/// exact division and root instead of walking the inner range.
pub fn oracle_surd_ratio(a: &Natural, b: &Natural, bound: &Natural) -> OracleResult {
    let found = match ratio_scan_fits_u128(a, b, bound) {
        Some((a_small, b_small, bound_small)) => (1..=bound_small).find_map(|q| {
            ratio_probe_u128(a_small, b_small, bound_small, q)
                .map(|p| (from_u128(p), from_u128(q)))
        }),
        None => {
            let mut q = Natural::one();
            let mut hit = None;
            while &q <= bound {
                if let Some(p) = ratio_probe_big(a, b, bound, &q) {
                    hit = Some((p, q));
                    break;
                }
                q += &Natural::one();
            }
            hit
        }
    };
    if let Some((p, q)) = &found {
        check_ratio_witness(a, b, p, q);
    }
    OracleResult::new(found, bound)
}

/// [`oracle_surd_ratio`] sharded across worker threads; merges to the
/// lexicographically first witness, identical to the sequential scan.
pub fn oracle_surd_ratio_sharded(a: &Natural, b: &Natural, bound: &Natural) -> OracleResult {
    match ratio_scan_fits_u128(a, b, bound) {
        Some((a_small, b_small, bound_small)) if bound_small <= u128::from(u64::MAX) => {
            let found = (1..=bound_small as u64)
                .into_par_iter()
                .find_map_first(|q| {
                    ratio_probe_u128(a_small, b_small, bound_small, u128::from(q))
                        .map(|p| (from_u128(p), from_u128(u128::from(q))))
                });
            if let Some((p, q)) = &found {
                check_ratio_witness(a, b, p, q);
            }
            OracleResult::new(found, bound)
        }
        _ => oracle_surd_ratio(a, b, bound),
    }
}

/// For a fixed `q`: the unique `p <= bound` with `a·q² = b·p²`, if any.
fn ratio_probe_u128(a: u128, b: u128, bound: u128, q: u128) -> Option<u128> {
    let lhs = a * q * q;
    if !lhs.is_multiple_of(b) {
        return None;
    }
    let p = integer_root_u128(lhs / b, Degree::Square)?;
    (p <= bound).then_some(p)
}

fn ratio_probe_big(a: &Natural, b: &Natural, bound: &Natural, q: &Natural) -> Option<Natural> {
    let lhs = a * &q.pow(2);
    let target = lhs.div_exact(b)?;
    let p = integer_root(&target, Degree::Square)?;
    (&p <= bound).then_some(p)
}

/// Self-validation: a root witness must satisfy `p^e = n·q^e` exactly.
fn check_root_witness(n: &Natural, degree: Degree, p: &Natural, q: &Natural) {
    let e = degree.exponent();
    assert_eq!(
        p.pow(e),
        n * &q.pow(e),
        "oracle returned an invalid root witness for n={n}, degree={degree}",
    );
}

/// Self-validation: a ratio witness must satisfy `a·q² = b·p²` exactly.
fn check_ratio_witness(a: &Natural, b: &Natural, p: &Natural, q: &Natural) {
    assert_eq!(
        a * &q.pow(2),
        b * &p.pow(2),
        "oracle returned an invalid ratio witness for a={a}, b={b}",
    );
}

/// Machine-word fast path applies when every `n·q^e` in the scan fits u128.
fn root_scan_fits_u128(n: &Natural, q_bound: &Natural, e: u32) -> Option<(u128, u128)> {
    let n_small = n.to_u128()?;
    let bound_small = q_bound.to_u128()?;
    let max_target = n_small.checked_mul(bound_small.checked_pow(e)?)?;
    let _ = max_target;
    Some((n_small, bound_small))
}

fn ratio_scan_fits_u128(a: &Natural, b: &Natural, bound: &Natural) -> Option<(u128, u128, u128)> {
    let a_small = a.to_u128()?;
    let b_small = b.to_u128()?;
    let bound_small = bound.to_u128()?;
    a_small.checked_mul(bound_small.checked_mul(bound_small)?)?;
    Some((a_small, b_small, bound_small))
}

fn from_u128(v: u128) -> Natural {
    Natural::try_from(v).expect("scan values start at 1")
}
