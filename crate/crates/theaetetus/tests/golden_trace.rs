//! Golden tests for the two stable trace serializations.

use euclid_arith::Natural;
use theaetetus::{ProofTrace, Surd};

fn sqrt2_trace() -> ProofTrace {
    ProofTrace::derive(&Surd::sqrt(Natural::try_from(2u64).unwrap()))
}

#[test]
fn text_form_matches_golden() {
    let expected = include_str!("golden/trace_sqrt2.txt");
    assert_eq!(format!("{}\n", sqrt2_trace()), expected);
}

#[test]
fn json_form_matches_golden() {
    let expected = include_str!("golden/trace_sqrt2.json");
    let json = serde_json::to_string_pretty(&sqrt2_trace()).unwrap();
    assert_eq!(format!("{json}\n"), expected);
}

#[test]
fn golden_json_deserializes_and_replays() {
    let trace: ProofTrace = serde_json::from_str(include_str!("golden/trace_sqrt2.json")).unwrap();
    assert_eq!(trace, sqrt2_trace());
    trace.replay().unwrap();
}

#[test]
fn json_roundtrips_for_both_degrees() {
    for surd in [
        Surd::sqrt(Natural::try_from(17u64).unwrap()),
        Surd::cbrt(Natural::try_from(17u64).unwrap()),
        Surd::cbrt(Natural::try_from(27u64).unwrap()),
    ] {
        let trace = ProofTrace::derive(&surd);
        let json = serde_json::to_string(&trace).unwrap();
        let back: ProofTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, trace);
        back.replay().unwrap();
    }
}
