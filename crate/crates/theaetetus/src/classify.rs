//! The boys' partition: every natural is either square-equilateral or
//! oblong, and either cube-equilateral or parallelepipedal.
//!
//! A square integer is an equal times an equal (definition VII.18) and is
//! likened to the square of that side. Everything else can only be
//! encompassed by a greater side and a smaller one; its canonical figure is
//! the unit-width rectangle `(1, n)`, the one the lesson actually draws.
//! All other rectangles for `n` stay available via
//! [`oblong_factorizations`]. Solids run in exact parallel with the cube
//! and the `(1, 1, n)` parallelepiped, which is likewise unique.

use euclid_arith::{floor_root, integer_root, Degree, Natural};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Plane verdict for a natural.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaneClass {
    /// A product of an equal times an equal: the square of `side`.
    #[serde(rename = "square")]
    SquareEquilateral { side: Natural },
    /// Encompassed only by unequal sides; canonical figure `(1, n)`.
    Oblong { figure: (Natural, Natural) },
}

impl PlaneClass {
    pub fn is_square(&self) -> bool {
        matches!(self, PlaneClass::SquareEquilateral { .. })
    }
}

/// Solid verdict for a natural.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolidClass {
    /// An equal by an equal by an equal: the cube of `side`.
    #[serde(rename = "cube")]
    CubeEquilateral { side: Natural },
    /// Not a cube; canonical figure `(1, 1, n)`.
    Parallelepipedal { figure: (Natural, Natural, Natural) },
}

impl SolidClass {
    pub fn is_cube(&self) -> bool {
        matches!(self, SolidClass::CubeEquilateral { .. })
    }
}

pub fn classify_plane(n: &Natural) -> PlaneClass {
    match integer_root(n, Degree::Square) {
        Some(side) => PlaneClass::SquareEquilateral { side },
        None => PlaneClass::Oblong {
            figure: (Natural::one(), n.clone()),
        },
    }
}

pub fn classify_solid(n: &Natural) -> SolidClass {
    match integer_root(n, Degree::Cube) {
        Some(side) => SolidClass::CubeEquilateral { side },
        None => SolidClass::Parallelepipedal {
            figure: (Natural::one(), Natural::one(), n.clone()),
        },
    }
}

/// All rectangles for `n`: ordered pairs `(p, q)` with `p <= q` and
/// `p·q = n`, ascending in `p`.
///
/// This is the ambiguity that makes "the sides of an integer" ill-defined
/// — 15 is 3 times 5 but also 15 times 1 — and the reason the canonical
/// oblong figure is pinned to `(1, n)`.
pub fn oblong_factorizations(n: &Natural) -> Vec<(Natural, Natural)> {
    let limit = floor_root(n, Degree::Square);
    let mut pairs = Vec::new();
    let mut d = Natural::one();
    while d <= limit {
        if let Some(q) = n.div_exact(&d) {
            pairs.push((d.clone(), q));
        }
        d += &Natural::one();
    }
    pairs
}

/// One row of the full classification.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub n: Natural,
    pub plane: PlaneClass,
    pub solid: SolidClass,
}

/// The classification of every natural from 1 to `max`, in order.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ClassificationTable {
    max: Natural,
    rows: Vec<TableRow>,
}

impl ClassificationTable {
    pub fn max(&self) -> &Natural {
        &self.max
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }
}

/// Builds the table for `1..=max`. Row order is the order of the naturals.
pub fn classification_table(max: &Natural) -> ClassificationTable {
    let mut rows = Vec::new();
    let mut n = Natural::one();
    while &n <= max {
        rows.push(TableRow {
            n: n.clone(),
            plane: classify_plane(&n),
            solid: classify_solid(&n),
        });
        n += &Natural::one();
    }
    ClassificationTable {
        max: max.clone(),
        rows,
    }
}

/// How many naturals in `1..=max` are not perfect squares — the count of
/// quadratic powers the lesson turns up, `max − ⌊√max⌋`.
///
/// Returns a plain count (which may be zero: below 2 every natural is a
/// square), not a `Natural`.
pub fn power_count(max: &Natural) -> BigUint {
    max.as_biguint() - floor_root(max, Degree::Square).as_biguint()
}
