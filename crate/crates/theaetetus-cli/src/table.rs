//! The table document and its three wire forms.
//!
//! CSV columns are fixed, in this order:
//! `n, plane_class, side_or_figure, solid_class, line_kind`.
//! Cells: `plane_class` is `square` or `oblong`; `side_or_figure` is the
//! square's side or the oblong figure `1x<n>`; `solid_class` is `cube` or
//! `parallelepipedal` (the solid figure is canonical and recoverable from
//! `n`); `line_kind` is the degree-2 kind, `length` or `power`. A trailing
//! `# power_count = <k>` comment carries the summary; parsers skip `#`
//! lines.
//!
//! Parsing accepts only the canonical table: a file whose rows disagree
//! with the classification of its own `n` values is rejected, so both
//! parsers return either the exact in-memory table or an error — never a
//! plausible-looking forgery.

use std::fmt;

use euclid_arith::Natural;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use theaetetus::{
    classification_table, classify_line, power_count, LineKind, PlaneClass, SolidClass, Surd,
};

pub const TABLE_COLUMNS: [&str; 5] =
    ["n", "plane_class", "side_or_figure", "solid_class", "line_kind"];

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub n: Natural,
    pub plane: PlaneClass,
    pub solid: SolidClass,
    pub line_kind: LineKind,
}

/// The classification of `1..=max` plus the power count, as emitted and
/// re-parsed by the CLI.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TableDocument {
    pub max: Natural,
    pub rows: Vec<TableEntry>,
    #[serde(with = "count_string")]
    pub power_count: BigUint,
}

/// Ways a table file can fail to parse or to be the canonical table.
#[derive(Debug, Clone, PartialEq)]
pub enum TableParseError {
    Csv(String),
    Json(String),
    BadHeader,
    BadCell {
        row: usize,
        column: &'static str,
        reason: String,
    },
    Empty,
    OutOfOrder {
        row: usize,
    },
    NotCanonical {
        row: usize,
        detail: String,
    },
    CountMismatch,
}

impl fmt::Display for TableParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableParseError::Csv(e) => write!(f, "csv: {e}"),
            TableParseError::Json(e) => write!(f, "json: {e}"),
            TableParseError::BadHeader => write!(f, "header does not match {TABLE_COLUMNS:?}"),
            TableParseError::BadCell { row, column, reason } => {
                write!(f, "row {row}, column {column}: {reason}")
            }
            TableParseError::Empty => write!(f, "table has no rows"),
            TableParseError::OutOfOrder { row } => {
                write!(f, "row {row} breaks the 1..=max ordering")
            }
            TableParseError::NotCanonical { row, detail } => {
                write!(f, "row {row} is not the canonical classification: {detail}")
            }
            TableParseError::CountMismatch => write!(f, "power count disagrees with the rows"),
        }
    }
}

impl std::error::Error for TableParseError {}

impl TableDocument {
    /// Classifies `1..=max` and attaches the degree-2 line kind per row.
    pub fn build(max: &Natural) -> TableDocument {
        let table = classification_table(max);
        let rows = table
            .rows()
            .iter()
            .map(|row| TableEntry {
                n: row.n.clone(),
                plane: row.plane.clone(),
                solid: row.solid.clone(),
                line_kind: classify_line(&Surd::sqrt(row.n.clone())),
            })
            .collect();
        TableDocument {
            max: max.clone(),
            rows,
            power_count: power_count(max),
        }
    }

    /// Checks that the document is the canonical table for its own `max`.
    pub fn validate(&self) -> Result<(), TableParseError> {
        if self.rows.is_empty() {
            return Err(TableParseError::Empty);
        }
        let mut expected = Natural::one();
        let mut powers = BigUint::from(0u32);
        for (i, row) in self.rows.iter().enumerate() {
            if row.n != expected {
                return Err(TableParseError::OutOfOrder { row: i });
            }
            if row.plane != theaetetus::classify_plane(&row.n) {
                return Err(TableParseError::NotCanonical {
                    row: i,
                    detail: "plane class".into(),
                });
            }
            if row.solid != theaetetus::classify_solid(&row.n) {
                return Err(TableParseError::NotCanonical {
                    row: i,
                    detail: "solid class".into(),
                });
            }
            if row.line_kind != classify_line(&Surd::sqrt(row.n.clone())) {
                return Err(TableParseError::NotCanonical {
                    row: i,
                    detail: "line kind".into(),
                });
            }
            if row.line_kind == LineKind::Power {
                powers += 1u32;
            }
            expected += &Natural::one();
        }
        let last = &self.rows[self.rows.len() - 1].n;
        if last != &self.max {
            return Err(TableParseError::OutOfOrder {
                row: self.rows.len() - 1,
            });
        }
        if powers != self.power_count || self.power_count != power_count(&self.max) {
            return Err(TableParseError::CountMismatch);
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(TABLE_COLUMNS).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record([
                    row.n.to_string(),
                    plane_class_cell(&row.plane).to_string(),
                    side_or_figure_cell(&row.plane),
                    solid_class_cell(&row.solid).to_string(),
                    row.line_kind.to_string(),
                ])
                .expect("in-memory write");
        }
        let mut bytes = writer.into_inner().expect("in-memory flush");
        bytes.extend_from_slice(format!("# power_count = {}\n", self.power_count).as_bytes());
        String::from_utf8(bytes).expect("csv output is utf-8")
    }

    pub fn from_csv(input: &[u8]) -> Result<TableDocument, TableParseError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .comment(Some(b'#'))
            .from_reader(input);
        let headers = reader
            .headers()
            .map_err(|e| TableParseError::Csv(e.to_string()))?;
        if headers.iter().ne(TABLE_COLUMNS) {
            return Err(TableParseError::BadHeader);
        }
        let mut rows = Vec::new();
        let mut powers = BigUint::from(0u32);
        for (i, record) in reader.records().enumerate() {
            let record = record.map_err(|e| TableParseError::Csv(e.to_string()))?;
            if record.len() != TABLE_COLUMNS.len() {
                return Err(TableParseError::Csv(format!(
                    "row {i} has {} fields",
                    record.len()
                )));
            }
            let n: Natural = parse_cell(&record[0], i, "n")?;
            let plane = parse_plane_cells(&record[1], &record[2], &n, i)?;
            let solid = parse_solid_cell(&record[3], &n, i)?;
            let line_kind = match &record[4] {
                "length" => LineKind::Length,
                "power" => LineKind::Power,
                other => {
                    return Err(TableParseError::BadCell {
                        row: i,
                        column: "line_kind",
                        reason: format!("unknown kind {other:?}"),
                    })
                }
            };
            if line_kind == LineKind::Power {
                powers += 1u32;
            }
            rows.push(TableEntry {
                n,
                plane,
                solid,
                line_kind,
            });
        }
        let max = match rows.last() {
            Some(row) => row.n.clone(),
            None => return Err(TableParseError::Empty),
        };
        let doc = TableDocument {
            max,
            rows,
            power_count: powers,
        };
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json_string(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("table serializes");
        json.push('\n');
        json
    }

    pub fn from_json(input: &[u8]) -> Result<TableDocument, TableParseError> {
        let doc: TableDocument =
            serde_json::from_slice(input).map_err(|e| TableParseError::Json(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Plain-text rendering: aligned columns, then the power-count summary.
    pub fn to_text(&self) -> String {
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|row| {
                [
                    row.n.to_string(),
                    plane_class_cell(&row.plane).to_string(),
                    side_or_figure_cell(&row.plane),
                    solid_class_cell(&row.solid).to_string(),
                    row.line_kind.to_string(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = TABLE_COLUMNS.iter().map(|c| c.len()).collect();
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut push_row = |row: &[String]| {
            let mut line = String::new();
            for (w, cell) in widths.iter().zip(row) {
                if !line.is_empty() {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        push_row(&TABLE_COLUMNS.map(String::from));
        for row in &cells {
            push_row(row);
        }
        out.push_str(&format!("power count up to {}: {}\n", self.max, self.power_count));
        out
    }
}

pub(crate) fn plane_class_cell(plane: &PlaneClass) -> &'static str {
    match plane {
        PlaneClass::SquareEquilateral { .. } => "square",
        PlaneClass::Oblong { .. } => "oblong",
    }
}

pub(crate) fn side_or_figure_cell(plane: &PlaneClass) -> String {
    match plane {
        PlaneClass::SquareEquilateral { side } => side.to_string(),
        PlaneClass::Oblong { figure: (p, q) } => format!("{p}x{q}"),
    }
}

pub(crate) fn solid_class_cell(solid: &SolidClass) -> &'static str {
    match solid {
        SolidClass::CubeEquilateral { .. } => "cube",
        SolidClass::Parallelepipedal { .. } => "parallelepipedal",
    }
}

fn parse_cell(cell: &str, row: usize, column: &'static str) -> Result<Natural, TableParseError> {
    cell.parse().map_err(|e| TableParseError::BadCell {
        row,
        column,
        reason: format!("{e}"),
    })
}

fn parse_plane_cells(
    class: &str,
    figure: &str,
    n: &Natural,
    row: usize,
) -> Result<PlaneClass, TableParseError> {
    match class {
        "square" => {
            let side = parse_cell(figure, row, "side_or_figure")?;
            Ok(PlaneClass::SquareEquilateral { side })
        }
        "oblong" => {
            let (p, q) = figure.split_once('x').ok_or(TableParseError::BadCell {
                row,
                column: "side_or_figure",
                reason: "oblong figure must be <p>x<q>".into(),
            })?;
            let p = parse_cell(p, row, "side_or_figure")?;
            let q = parse_cell(q, row, "side_or_figure")?;
            if &(&p * &q) != n {
                return Err(TableParseError::NotCanonical {
                    row,
                    detail: "figure sides do not multiply to n".into(),
                });
            }
            Ok(PlaneClass::Oblong { figure: (p, q) })
        }
        other => Err(TableParseError::BadCell {
            row,
            column: "plane_class",
            reason: format!("unknown class {other:?}"),
        }),
    }
}

fn parse_solid_cell(class: &str, n: &Natural, row: usize) -> Result<SolidClass, TableParseError> {
    match class {
        "cube" | "parallelepipedal" => {
            let computed = theaetetus::classify_solid(n);
            let consistent = matches!(
                (&computed, class),
                (SolidClass::CubeEquilateral { .. }, "cube")
                    | (SolidClass::Parallelepipedal { .. }, "parallelepipedal")
            );
            if consistent {
                Ok(computed)
            } else {
                Err(TableParseError::NotCanonical {
                    row,
                    detail: format!("solid class {class:?} disagrees with n"),
                })
            }
        }
        other => Err(TableParseError::BadCell {
            row,
            column: "solid_class",
            reason: format!("unknown class {other:?}"),
        }),
    }
}

mod count_string {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        if raw.is_empty() || !raw.bytes().all(|b| b.is_ascii_digit()) {
            return Err(de::Error::custom("count must be a decimal string"));
        }
        raw.parse().map_err(de::Error::custom)
    }
}
