//! Report documents for the non-table subcommands, their text renderings,
//! and the oracle cross-validation gate.

use euclid_arith::{Degree, Natural, Ratio};
use serde::Serialize;
use surd_oracle::{oracle_root_rational, oracle_surd_ratio, OracleResult, Witness};
use theaetetus::{
    classify_line, classify_plane, classify_solid, decide_rationality, oblong_factorizations,
    partition_audit, surd_ratio_commensurable, CommensurabilityVerdict, LineKind, PartitionAudit,
    RationalityVerdict, Surd,
};

use crate::table::{plane_class_cell, side_or_figure_cell, solid_class_cell, TABLE_COLUMNS};

/// A verdict and the oracle answer disagree. Should be impossible; treated
/// as an internal contract violation (exit 1) by the CLI.
#[derive(Debug, Clone, PartialEq)]
pub struct Disagreement {
    pub verdict: String,
    pub oracle: String,
}

impl std::fmt::Display for Disagreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "decision procedure and oracle disagree: verdict says {}, oracle says {}",
            self.verdict, self.oracle
        )
    }
}

fn describe_found(found: &Option<Witness>) -> String {
    match found {
        Some(w) => format!("witness p={}, q={}", w.p, w.q),
        None => "no witness".into(),
    }
}

/// A rational verdict must be matched by the oracle witness `(k, 1)`; an
/// irrational verdict by an exhausted search. Any search bound >= 1
/// suffices, because a rational root of a natural is a natural, so the
/// first witness always sits at q = 1.
pub fn cross_validate_rationality(
    verdict: &RationalityVerdict,
    oracle: &OracleResult,
) -> Result<(), Disagreement> {
    let agreement = match (verdict, &oracle.found) {
        (RationalityVerdict::RationalInteger(k), Some(w)) => &w.p == k && w.q.is_one(),
        (RationalityVerdict::Irrational(_), None) => true,
        _ => false,
    };
    if agreement {
        Ok(())
    } else {
        Err(Disagreement {
            verdict: match verdict {
                RationalityVerdict::RationalInteger(k) => format!("rational, root {k}"),
                RationalityVerdict::Irrational(_) => "irrational".into(),
            },
            oracle: describe_found(&oracle.found),
        })
    }
}

/// A commensurable verdict `p/q` must be found by the oracle exactly when
/// `q` is within the search bound (the first witness is the reduced pair,
/// so no smaller one exists); an incommensurable verdict must leave the
/// search exhausted.
pub fn cross_validate_commensurability(
    verdict: &CommensurabilityVerdict,
    oracle: &OracleResult,
) -> Result<(), Disagreement> {
    let expected = match verdict {
        CommensurabilityVerdict::Commensurable { ratio } if ratio.den() <= &oracle.search_bound => {
            Some((ratio.num(), ratio.den()))
        }
        _ => None,
    };
    let agreement = match (&oracle.found, expected) {
        (Some(w), Some((p, q))) => &w.p == p && &w.q == q,
        (None, None) => true,
        _ => false,
    };
    if agreement {
        Ok(())
    } else {
        Err(Disagreement {
            verdict: match verdict {
                CommensurabilityVerdict::Commensurable { ratio } => format!("commensurable {ratio}"),
                CommensurabilityVerdict::Incommensurable { witness } => {
                    format!("incommensurable (reduced {witness})")
                }
            },
            oracle: describe_found(&oracle.found),
        })
    }
}

#[derive(Serialize, Debug)]
pub struct ClassifyReport {
    pub n: Natural,
    pub plane: theaetetus::PlaneClass,
    pub solid: theaetetus::SolidClass,
    pub factorizations: Vec<(Natural, Natural)>,
    pub line_kind_square: LineKind,
    pub line_kind_cube: LineKind,
}

impl ClassifyReport {
    pub fn build(n: &Natural) -> Self {
        ClassifyReport {
            n: n.clone(),
            plane: classify_plane(n),
            solid: classify_solid(n),
            factorizations: oblong_factorizations(n),
            line_kind_square: classify_line(&Surd::sqrt(n.clone())),
            line_kind_cube: classify_line(&Surd::cbrt(n.clone())),
        }
    }

    pub fn to_text(&self) -> String {
        let figures: Vec<String> = self
            .factorizations
            .iter()
            .map(|(p, q)| format!("{p}x{q}"))
            .collect();
        let mut out = String::new();
        out.push_str(&format!("n: {}\n", self.n));
        out.push_str(&format!(
            "plane: {}, figure {}\n",
            plane_class_cell(&self.plane),
            side_or_figure_cell(&self.plane)
        ));
        out.push_str(&format!(
            "solid: {}, figure 1x1x{}\n",
            solid_class_cell(&self.solid),
            self.n
        ));
        out.push_str(&format!("factorizations: {}\n", figures.join(", ")));
        out.push_str(&format!("line (degree 2): {}\n", self.line_kind_square));
        out.push_str(&format!("line (degree 3): {}\n", self.line_kind_cube));
        out
    }

    /// One CSV row in the table's fixed five-column layout.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(TABLE_COLUMNS).expect("in-memory write");
        writer
            .write_record([
                self.n.to_string(),
                plane_class_cell(&self.plane).to_string(),
                side_or_figure_cell(&self.plane),
                solid_class_cell(&self.solid).to_string(),
                self.line_kind_square.to_string(),
            ])
            .expect("in-memory write");
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

#[derive(Serialize, Debug)]
pub struct ProveReport {
    pub surd: Surd,
    pub verdict: RationalityVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResult>,
}

impl ProveReport {
    pub fn build(
        n: &Natural,
        degree: Degree,
        verify: bool,
        q_bound: &Natural,
    ) -> Result<Self, Disagreement> {
        let surd = Surd::new(n.clone(), degree);
        let verdict = decide_rationality(&surd);
        let oracle = if verify {
            let result = oracle_root_rational(n, degree, q_bound);
            cross_validate_rationality(&verdict, &result)?;
            Some(result)
        } else {
            None
        };
        Ok(ProveReport {
            surd,
            verdict,
            oracle,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("surd: {}\n", self.surd));
        match &self.verdict {
            RationalityVerdict::RationalInteger(k) => {
                out.push_str(&format!("verdict: rational, {} = {k}\n", self.surd));
                out.push_str(&format!(
                    "check: {k}^{} = {}\n",
                    self.surd.degree(),
                    self.surd.radicand()
                ));
            }
            RationalityVerdict::Irrational(trace) => {
                out.push_str("verdict: irrational\n");
                out.push_str(&format!("{trace}\n"));
            }
        }
        if let Some(oracle) = &self.oracle {
            out.push_str(&format!(
                "oracle: {} up to q = {}; agrees\n",
                describe_found(&oracle.found),
                oracle.search_bound
            ));
        }
        out
    }
}

#[derive(Serialize, Debug)]
pub struct X9Report {
    pub a: Natural,
    pub b: Natural,
    pub reduced: Ratio,
    pub verdict: CommensurabilityVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResult>,
}

impl X9Report {
    pub fn build(
        a: &Natural,
        b: &Natural,
        verify: bool,
        bound: &Natural,
    ) -> Result<Self, Disagreement> {
        let verdict = surd_ratio_commensurable(a, b);
        let reduced = euclid_arith::reduce(&Ratio::new(a.clone(), b.clone()))
            .reduced()
            .clone();
        let oracle = if verify {
            let result = oracle_surd_ratio(a, b, bound);
            cross_validate_commensurability(&verdict, &result)?;
            Some(result)
        } else {
            None
        };
        Ok(X9Report {
            a: a.clone(),
            b: b.clone(),
            reduced,
            verdict,
            oracle,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("surds: sqrt({}) : sqrt({})\n", self.a, self.b));
        out.push_str(&format!("reduced radicand ratio: {}\n", self.reduced));
        match &self.verdict {
            CommensurabilityVerdict::Commensurable { ratio } => {
                out.push_str(&format!(
                    "verdict: commensurable, sqrt({}) : sqrt({}) = {ratio}\n",
                    self.a, self.b
                ));
                out.push_str(&format!(
                    "identity: {}*{}^2 = {}*{}^2\n",
                    self.a,
                    ratio.den(),
                    self.b,
                    ratio.num()
                ));
            }
            CommensurabilityVerdict::Incommensurable { witness } => {
                out.push_str(&format!(
                    "verdict: incommensurable; {witness} is not a ratio of squares\n"
                ));
            }
        }
        if let Some(oracle) = &self.oracle {
            out.push_str(&format!(
                "oracle: {} within bound {}; agrees\n",
                describe_found(&oracle.found),
                oracle.search_bound
            ));
        }
        out
    }
}

#[derive(Serialize, Debug)]
pub struct AuditReport {
    #[serde(flatten)]
    pub audit: PartitionAudit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResult>,
}

impl AuditReport {
    pub fn build(
        a: &Natural,
        b: &Natural,
        verify: bool,
        bound: &Natural,
    ) -> Result<Self, Disagreement> {
        let audit = partition_audit(a, b);
        let oracle = if verify {
            let result = oracle_surd_ratio(a, b, bound);
            cross_validate_commensurability(audit.relation(), &result)?;
            Some(result)
        } else {
            None
        };
        Ok(AuditReport { audit, oracle })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}: {}\n", self.audit.left(), self.audit.left_kind()));
        out.push_str(&format!("{}: {}\n", self.audit.right(), self.audit.right_kind()));
        match self.audit.relation() {
            CommensurabilityVerdict::Commensurable { ratio } => {
                out.push_str(&format!(
                    "relation: commensurable, {} : {} = {ratio}\n",
                    self.audit.left(),
                    self.audit.right()
                ));
            }
            CommensurabilityVerdict::Incommensurable { witness } => {
                out.push_str(&format!(
                    "relation: incommensurable; reduced radicand ratio {witness}\n"
                ));
            }
        }
        if self.audit.gap() {
            out.push_str("partition gap: raised (two powers, commensurable with one another)\n");
        } else {
            out.push_str("partition gap: none\n");
        }
        if let Some(oracle) = &self.oracle {
            out.push_str(&format!(
                "oracle: {} within bound {}; agrees\n",
                describe_found(&oracle.found),
                oracle.search_bound
            ));
        }
        out
    }
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum OracleReport {
    RootRational {
        n: Natural,
        degree: Degree,
        result: OracleResult,
    },
    SurdRatio {
        a: Natural,
        b: Natural,
        result: OracleResult,
    },
}

impl OracleReport {
    pub fn root(n: &Natural, degree: Degree, bound: &Natural) -> Self {
        OracleReport::RootRational {
            n: n.clone(),
            degree,
            result: oracle_root_rational(n, degree, bound),
        }
    }

    pub fn ratio(a: &Natural, b: &Natural, bound: &Natural) -> Self {
        OracleReport::SurdRatio {
            a: a.clone(),
            b: b.clone(),
            result: oracle_surd_ratio(a, b, bound),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            OracleReport::RootRational { n, degree, result } => {
                let mut out = format!(
                    "oracle root-rational: n={n}, degree={degree}, q bound {}\n",
                    result.search_bound
                );
                out.push_str(&match &result.found {
                    Some(w) => format!("result: witness p={}, q={} ({}^{degree} = {n}*{}^{degree})\n", w.p, w.q, w.p, w.q),
                    None => format!("result: no witness; every q <= {} examined\n", result.search_bound),
                });
                out
            }
            OracleReport::SurdRatio { a, b, result } => {
                let mut out = format!(
                    "oracle surd-ratio: a={a}, b={b}, bound {}\n",
                    result.search_bound
                );
                out.push_str(&match &result.found {
                    Some(w) => format!("result: witness p={}, q={} ({a}*{}^2 = {b}*{}^2)\n", w.p, w.q, w.q, w.p),
                    None => format!("result: no witness; every p, q <= {} examined\n", result.search_bound),
                });
                out
            }
        }
    }
}
