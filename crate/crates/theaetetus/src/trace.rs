//! Replayable proof traces for the irrationality argument.
//!
//! The derivation is the classical one. Suppose the root of `n` is rational:
//! `root(n) = t/q` for some naturals. Reduce `t/q` to lowest terms `r/s`
//! (propositions VII.20–22 guarantee the reduction and that the least terms
//! divide the originals). Raise both sides to the degree: `n/1 = r^e/s^e`.
//! By VII.27 the powers `r^e` and `s^e` are still relatively prime, so
//! `r^e/s^e` is itself in lowest terms, and by the uniqueness of least
//! terms `s^e` must measure 1 — that is, `s = 1` and `n = r^e`. The final
//! step tests whether `n` actually is a perfect `e`-th power: if not, the
//! assumption has collapsed and the root is irrational.
//!
//! The hypothesis names `t, q, r, s` stay symbolic (for an irrational root
//! no such naturals exist), while every concrete number in the trace — the
//! radicand, the `n/1` equation, the root test — is recomputable, which is
//! exactly what [`ProofTrace::replay`] does, using only `euclid-arith`
//! operations.

use std::fmt;

use euclid_arith::{coprime_power_lemma, integer_root, reduce, Degree, Natural, Ratio};
use serde::{Deserialize, Serialize};

use crate::surd::Surd;

/// One inference step. The six steps always occur in the order they are
/// declared here; [`ProofTrace::replay`] rejects anything else.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "step")]
pub enum TraceStep {
    /// Hypothesis: `root(n) = t/q` for some naturals `t, q`.
    AssumeRational { surd: Surd },
    /// `t/q = r/s` with `gcd(r, s) = 1`, `r` measuring `t`, `s` measuring `q`.
    ReduceToLowestTerms,
    /// Raise both sides to the degree: `n/1 = r^e/s^e`.
    SquareBothSides { equation_lhs: Ratio },
    /// VII.27: `gcd(r, s) = 1` implies `gcd(r^e, s^e) = 1`.
    InvokeCoprimePowers { degree: Degree },
    /// `r^e/s^e` is in lowest terms, so `s^e` measures 1 and `n = r^e`.
    ConcludeUnitDenominator { radicand: Natural },
    /// Exact root test of the radicand; `None` contradicts `n = r^e`.
    PerfectPowerTest { outcome: Option<Natural> },
}

/// What the trace concludes.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceConclusion {
    /// The root test failed: no rational root exists.
    Irrational,
    /// The radicand is `root^e`; the root is the natural itself.
    PerfectPower { root: Natural },
}

/// A complete six-step derivation for one surd.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ProofTrace {
    surd: Surd,
    steps: Vec<TraceStep>,
    conclusion: TraceConclusion,
}

/// A way in which a trace fails to replay.
#[derive(Debug, Clone, PartialEq)]
pub enum ReplayError {
    /// Not exactly six steps.
    WrongStepCount(usize),
    /// Step at this index is not the step the derivation requires there.
    StepOutOfOrder(usize),
    /// The assumed surd differs from the trace's subject.
    SurdMismatch,
    /// The raised equation is not `n/1` for the assumed radicand.
    EquationMismatch,
    /// The lemma invocation names a different degree than the surd's.
    DegreeMismatch,
    /// The concluding step names a different radicand than the surd's.
    RadicandMismatch,
    /// `n/1` failed to reduce to itself with unit factors — impossible for
    /// a genuine trace, reachable only through corrupted input.
    NotLowestTerms,
    /// The coprime-powers lemma refuted the recorded inference.
    LemmaRefuted,
    /// The recorded root-test outcome disagrees with recomputation.
    RootMismatch,
    /// The recorded conclusion does not follow from the final step.
    ConclusionMismatch,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::WrongStepCount(n) => write!(f, "expected 6 steps, found {n}"),
            ReplayError::StepOutOfOrder(i) => write!(f, "step {i} is out of order"),
            ReplayError::SurdMismatch => write!(f, "assumed surd differs from the trace subject"),
            ReplayError::EquationMismatch => write!(f, "raised equation is not radicand/1"),
            ReplayError::DegreeMismatch => write!(f, "lemma degree differs from the surd degree"),
            ReplayError::RadicandMismatch => write!(f, "concluding radicand differs from the surd"),
            ReplayError::NotLowestTerms => write!(f, "radicand/1 did not reduce to unit factors"),
            ReplayError::LemmaRefuted => write!(f, "coprime-powers lemma refuted the inference"),
            ReplayError::RootMismatch => write!(f, "recorded root outcome disagrees with recomputation"),
            ReplayError::ConclusionMismatch => write!(f, "conclusion does not match the final step"),
        }
    }
}

impl std::error::Error for ReplayError {}

impl ProofTrace {
    /// Runs the derivation for `surd` and records every step.
    pub fn derive(surd: &Surd) -> ProofTrace {
        let radicand = surd.radicand().clone();
        let degree = surd.degree();
        let equation_lhs = Ratio::new(radicand.clone(), Natural::one());
        let outcome = integer_root(&radicand, degree);
        let conclusion = match &outcome {
            Some(root) => TraceConclusion::PerfectPower { root: root.clone() },
            None => TraceConclusion::Irrational,
        };
        let steps = vec![
            TraceStep::AssumeRational { surd: surd.clone() },
            TraceStep::ReduceToLowestTerms,
            TraceStep::SquareBothSides { equation_lhs },
            TraceStep::InvokeCoprimePowers { degree },
            TraceStep::ConcludeUnitDenominator { radicand },
            TraceStep::PerfectPowerTest { outcome },
        ];
        ProofTrace {
            surd: surd.clone(),
            steps,
            conclusion,
        }
    }

    pub fn surd(&self) -> &Surd {
        &self.surd
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn conclusion(&self) -> &TraceConclusion {
        &self.conclusion
    }

    /// Re-executes the trace step by step with `euclid-arith` operations
    /// and checks that it reaches the recorded conclusion.
    pub fn replay(&self) -> Result<(), ReplayError> {
        if self.steps.len() != 6 {
            return Err(ReplayError::WrongStepCount(self.steps.len()));
        }

        let assumed = match &self.steps[0] {
            TraceStep::AssumeRational { surd } => surd,
            _ => return Err(ReplayError::StepOutOfOrder(0)),
        };
        if assumed != &self.surd {
            return Err(ReplayError::SurdMismatch);
        }
        let radicand = self.surd.radicand();
        let degree = self.surd.degree();

        match &self.steps[1] {
            TraceStep::ReduceToLowestTerms => {}
            _ => return Err(ReplayError::StepOutOfOrder(1)),
        }

        let equation_lhs = match &self.steps[2] {
            TraceStep::SquareBothSides { equation_lhs } => equation_lhs,
            _ => return Err(ReplayError::StepOutOfOrder(2)),
        };
        if equation_lhs.num() != radicand || !equation_lhs.den().is_one() {
            return Err(ReplayError::EquationMismatch);
        }

        let lemma_degree = match &self.steps[3] {
            TraceStep::InvokeCoprimePowers { degree } => *degree,
            _ => return Err(ReplayError::StepOutOfOrder(3)),
        };
        if lemma_degree != degree {
            return Err(ReplayError::DegreeMismatch);
        }

        let concluded = match &self.steps[4] {
            TraceStep::ConcludeUnitDenominator { radicand } => radicand,
            _ => return Err(ReplayError::StepOutOfOrder(4)),
        };
        if concluded != radicand {
            return Err(ReplayError::RadicandMismatch);
        }

        // The computable content of the unit-denominator inference: the
        // lowest-terms form of n/1 is n/1 itself, with the unit as both
        // witness factors.
        let witness = reduce(equation_lhs);
        if !witness.reduced().den().is_one()
            || !witness.num_factor().is_one()
            || !witness.den_factor().is_one()
        {
            return Err(ReplayError::NotLowestTerms);
        }
        // And the lemma instance on that reduced pair must hold.
        if !coprime_power_lemma(witness.reduced().num(), witness.reduced().den(), degree) {
            return Err(ReplayError::LemmaRefuted);
        }

        let outcome = match &self.steps[5] {
            TraceStep::PerfectPowerTest { outcome } => outcome,
            _ => return Err(ReplayError::StepOutOfOrder(5)),
        };
        if outcome != &integer_root(radicand, degree) {
            return Err(ReplayError::RootMismatch);
        }

        let follows = match (&self.conclusion, outcome) {
            (TraceConclusion::Irrational, None) => true,
            (TraceConclusion::PerfectPower { root }, Some(found)) => {
                root == found && &root.pow(degree.exponent()) == radicand
            }
            _ => false,
        };
        if !follows {
            return Err(ReplayError::ConclusionMismatch);
        }
        Ok(())
    }
}

/// The stable line-oriented text form: one step per line, six lines, the
/// step name before the colon.
impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.surd.radicand();
        let e = self.surd.degree().exponent();
        let root = self.surd.degree().root_name();
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            match step {
                TraceStep::AssumeRational { surd } => {
                    write!(f, "AssumeRational: {surd} = t/q for some naturals t, q")?;
                }
                TraceStep::ReduceToLowestTerms => {
                    write!(
                        f,
                        "ReduceToLowestTerms: t/q = r/s with gcd(r, s) = 1, r measuring t and s measuring q"
                    )?;
                }
                TraceStep::SquareBothSides { equation_lhs } => {
                    write!(f, "SquareBothSides: {equation_lhs} = r^{e}/s^{e}")?;
                }
                TraceStep::InvokeCoprimePowers { degree } => {
                    let d = degree.exponent();
                    write!(f, "InvokeCoprimePowers: gcd(r, s) = 1, so gcd(r^{d}, s^{d}) = 1")?;
                }
                TraceStep::ConcludeUnitDenominator { radicand } => {
                    write!(
                        f,
                        "ConcludeUnitDenominator: r^{e}/s^{e} is in lowest terms, so s^{e} measures 1 and {radicand} = r^{e}"
                    )?;
                }
                TraceStep::PerfectPowerTest { outcome } => match outcome {
                    None => write!(
                        f,
                        "PerfectPowerTest: no natural k has k^{e} = {n}; contradiction, so {root}({n}) is irrational"
                    )?,
                    Some(k) => write!(
                        f,
                        "PerfectPowerTest: {n} = {k}^{e}, so {root}({n}) is the natural {k}"
                    )?,
                },
            }
        }
        Ok(())
    }
}
