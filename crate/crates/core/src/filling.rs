//! Skyline fillings and the four semistandard conditions.
//!
//! Rows are numbered from the top starting at 1, columns from the left
//! starting at 1. A filling of shape `α` has `αᵢ` entries in row `i`.
//! It is *semistandard* when
//!
//! 1. every row is weakly decreasing from left to right,
//! 2. every entry is at most its row index (the flag condition),
//! 3. the entries of each column are distinct,
//! 4. whenever `a` sits below `b` in a column with `a < b`, the box
//!    immediately right of `b` exists and holds some `c > a`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::polynomial::ExponentVector;

/// A box `(row, col)` of a skyline diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An assignment of positive integers to the boxes of a skyline diagram.
///
/// Construction only checks structure (row lengths, positivity); use
/// [`validate_filling`] or [`Filling::is_semistandard`] for the four
/// semistandard conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(shape: Composition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::RowCountMismatch {
                expected: shape.len(),
                found: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.parts()[i] {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    expected: shape.parts()[i],
                    found: row.len(),
                });
            }
            if let Some(j) = row.iter().position(|&e| e == 0) {
                return Err(Error::NonPositiveEntry {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
        Ok(Self { shape, rows })
    }

    /// Builds a filling whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        Self::new(shape, rows)
    }

    /// The filling with every box of row `i` holding `i`. For a partition
    /// this is the only semistandard filling.
    pub fn row_constant(shape: &Composition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![i as u32 + 1; len])
            .collect();
        Self {
            shape: shape.clone(),
            rows,
        }
    }

    pub(crate) fn from_parts_unchecked(shape: Composition, rows: Vec<Vec<u32>>) -> Self {
        debug_assert_eq!(shape.len(), rows.len());
        Self { shape, rows }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row `row` (1-based).
    pub fn row(&self, row: usize) -> &[u32] {
        &self.rows[row - 1]
    }

    /// Number of rows `n`.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entry at `(row, col)`, or `None` if the box is not in the diagram.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    pub fn at(&self, cell: Cell) -> Option<u32> {
        self.get(cell.row, cell.col)
    }

    pub(crate) fn set(&mut self, cell: Cell, value: u32) {
        self.rows[cell.row - 1][cell.col - 1] = value;
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub(crate) fn set_shape(&mut self, shape: Composition) {
        self.shape = shape;
    }

    /// Entries of column `col` from top to bottom, with their rows.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter_map(move |(i, row)| row.get(col - 1).map(|&e| (i + 1, e)))
    }

    /// Row holding `value` in column `col`, if any.
    pub fn find_in_column(&self, col: usize, value: u32) -> Option<usize> {
        self.column(col).find(|&(_, e)| e == value).map(|(i, _)| i)
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &e)| (Cell::new(i + 1, j + 1), e))
        })
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_semistandard(&self) -> bool {
        validate_filling(self).is_ok()
    }

    /// Returns `Ok(())` or a [`Error::NotSemistandard`] describing the
    /// first violation.
    pub fn ensure_semistandard(&self) -> Result<()> {
        let report = validate_filling(self);
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotSemistandard(v.to_string())),
        }
    }

    /// Renders the text form with an annotation appended to each entry.
    pub fn render_annotated(&self, mut mark: impl FnMut(Cell) -> &'static str) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                out.push('-');
            } else {
                for (j, e) in row.iter().enumerate() {
                    if j > 0 {
                        out.push(' ');
                    }
                    out.push_str(&e.to_string());
                    out.push_str(mark(Cell::new(i + 1, j + 1)));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Text form: one row per line, entries separated by spaces, and `-`
/// for an empty row. Every line, including the last, ends in `\n`.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_annotated(|_| ""))
    }
}

/// Parses the text form. Trailing `*` and `~` annotations on entries are
/// accepted and ignored, so annotated trace output reads back in.
impl FromStr for Filling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line == "-" {
                rows.push(Vec::new());
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.trim_end_matches(['*', '~'])
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad filling entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("filling text has no rows".into()));
        }
        Self::from_rows(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        FillingJson {
            shape: self.shape.parts().to_vec(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = FillingJson::deserialize(deserializer)?;
        let shape = Composition::new(raw.shape).map_err(serde::de::Error::custom)?;
        Filling::new(shape, raw.rows).map_err(serde::de::Error::custom)
    }
}

/// One broken semistandard condition, with the cells that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// Condition (i): `left` is smaller than its right neighbour `right`.
    RowIncrease { left: Cell, right: Cell },
    /// Condition (ii): the entry at `cell` exceeds its row index.
    Flag { cell: Cell },
    /// Condition (iii): `upper` and `lower` share a column and a value.
    ColumnRepeat { upper: Cell, lower: Cell },
    /// Condition (iv): `a` below `b` with `a < b`, and `c` (the box right
    /// of `b`) is missing or not larger than `a`.
    Triple { a: Cell, b: Cell, c: Option<Cell> },
}

impl Violation {
    /// Roman numeral of the violated condition.
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::RowIncrease { .. } => "i",
            Violation::Flag { .. } => "ii",
            Violation::ColumnRepeat { .. } => "iii",
            Violation::Triple { .. } => "iv",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowIncrease { left, right } => {
                write!(f, "(i) row increases from {left} to {right}")
            }
            Violation::Flag { cell } => write!(f, "(ii) entry at {cell} exceeds its row index"),
            Violation::ColumnRepeat { upper, lower } => {
                write!(f, "(iii) {upper} and {lower} repeat an entry in one column")
            }
            Violation::Triple { a, b, c: Some(c) } => {
                write!(
                    f,
                    "(iv) {a} below {b} is smaller, but {c} is not larger than {a}"
                )
            }
            Violation::Triple { a, b, c: None } => {
                write!(
                    f,
                    "(iv) {a} below {b} is smaller, and {b} has no right neighbour"
                )
            }
        }
    }
}

/// Outcome of [`validate_filling`]: at most one violation per condition,
/// the first found in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four semistandard conditions.
pub fn validate_filling(f: &Filling) -> ValidationReport {
    let mut row_increase = None;
    let mut flag = None;
    let mut repeat = None;
    let mut triple = None;

    for (cell, e) in f.cells() {
        let Cell { row, col } = cell;
        if row_increase.is_none() {
            if let Some(right) = f.get(row, col + 1) {
                if right > e {
                    row_increase = Some(Violation::RowIncrease {
                        left: cell,
                        right: Cell::new(row, col + 1),
                    });
                }
            }
        }
        if flag.is_none() && e as usize > row {
            flag = Some(Violation::Flag { cell });
        }
        // pairs with `cell` as the lower box
        for (upper, b) in f.column(col).take_while(|&(i, _)| i < row) {
            if repeat.is_none() && b == e {
                repeat = Some(Violation::ColumnRepeat {
                    upper: Cell::new(upper, col),
                    lower: cell,
                });
            }
            if triple.is_none() && e < b {
                let c = f.get(upper, col + 1);
                if c.is_none_or(|c| c <= e) {
                    triple = Some(Violation::Triple {
                        a: cell,
                        b: Cell::new(upper, col),
                        c: c.map(|_| Cell::new(upper, col + 1)),
                    });
                }
            }
        }
    }

    ValidationReport {
        violations: [row_increase, flag, repeat, triple]
            .into_iter()
            .flatten()
            .collect(),
    }
}

/// Whether equal entries in consecutive columns never have the left one
/// strictly below the right one. Holds for every semistandard filling.
pub fn check_non_attacking(f: &Filling) -> bool {
    f.cells().all(|(cell, e)| {
        f.column(cell.col + 1)
            .all(|(other_row, other)| other != e || cell.row <= other_row)
    })
}

/// The monomial `x^F`: exponent of `x_v` is the number of boxes holding `v`.
pub fn weight(f: &Filling) -> ExponentVector {
    let mut exps = vec![0u32; f.num_rows()];
    for &e in f.rows.iter().flatten() {
        let v = e as usize;
        if v > exps.len() {
            exps.resize(v, 0);
        }
        exps[v - 1] += 1;
    }
    ExponentVector::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filling(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn running_example_first_filling_is_valid() {
        let f = filling(&[&[1], &[2, 2, 2], &[], &[4, 4]]);
        assert!(validate_filling(&f).is_ok());
        assert_eq!(weight(&f).exponents(), &[1, 3, 0, 2]);
    }

    #[test]
    fn partition_row_constant_is_valid() {
        let f = filling(&[&[1, 1], &[2]]);
        assert!(f.is_semistandard());
        assert_eq!(f, Filling::row_constant(f.shape()));
    }

    #[test]
    fn increasing_row_violates_condition_one() {
        let f = filling(&[&[], &[1, 2]]);
        let report = validate_filling(&f);
        assert_eq!(
            report.violations,
            vec![Violation::RowIncrease {
                left: Cell::new(2, 1),
                right: Cell::new(2, 2)
            }]
        );
    }

    #[test]
    fn each_condition_reports_its_witness() {
        assert_eq!(
            validate_filling(&filling(&[&[2]])).violations,
            vec![Violation::Flag {
                cell: Cell::new(1, 1)
            }]
        );
        assert_eq!(
            validate_filling(&filling(&[&[1], &[1]])).violations,
            vec![Violation::ColumnRepeat {
                upper: Cell::new(1, 1),
                lower: Cell::new(2, 1)
            }]
        );
        // 1 below 2 in column 1, and the 2 has nothing to its right
        assert_eq!(
            validate_filling(&filling(&[&[], &[2], &[1]])).violations,
            vec![Violation::Triple {
                a: Cell::new(3, 1),
                b: Cell::new(2, 1),
                c: None
            }]
        );
        // c exists but is not larger than a
        assert_eq!(
            validate_filling(&filling(&[&[], &[2, 1], &[1, 1]])).violations,
            vec![
                Violation::ColumnRepeat {
                    upper: Cell::new(2, 2),
                    lower: Cell::new(3, 2)
                },
                Violation::Triple {
                    a: Cell::new(3, 1),
                    b: Cell::new(2, 1),
                    c: Some(Cell::new(2, 2))
                }
            ]
        );
    }

    #[test]
    fn structural_errors_are_distinct() {
        let shape = Composition::new(vec![1, 2]).unwrap();
        assert!(matches!(
            Filling::new(shape.clone(), vec![vec![1]]),
            Err(Error::RowCountMismatch { .. })
        ));
        assert!(matches!(
            Filling::new(shape.clone(), vec![vec![1], vec![2]]),
            Err(Error::RowLengthMismatch { row: 2, .. })
        ));
        assert!(matches!(
            Filling::new(shape, vec![vec![1], vec![2, 0]]),
            Err(Error::NonPositiveEntry { row: 2, col: 2 })
        ));
    }

    #[test]
    fn non_attacking_examples() {
        assert!(check_non_attacking(&filling(&[
            &[1],
            &[2, 2, 1],
            &[],
            &[4, 3]
        ])));
        assert!(check_non_attacking(&filling(&[&[1, 1]])));
        // the 1 at (3,1) attacks the 1 at (2,2)
        let attacking = filling(&[&[], &[2, 1], &[1]]);
        assert!(!check_non_attacking(&attacking));
        assert!(!attacking.is_semistandard());
    }

    #[test]
    fn empty_filling_has_trivial_weight() {
        let f = filling(&[&[], &[]]);
        assert!(f.is_semistandard());
        assert_eq!(weight(&f).exponents(), &[0, 0]);
        assert_eq!(weight(&filling(&[&[], &[2, 1]])).exponents(), &[1, 1]);
    }

    #[test]
    fn text_format() {
        let f = filling(&[&[1], &[2, 2, 2], &[], &[4, 4]]);
        let text = f.to_string();
        assert_eq!(text, "1\n2 2 2\n-\n4 4\n");
        assert_eq!(text.parse::<Filling>().unwrap(), f);
        assert_eq!("1*\n2~ 2 2*\n-\n4 4".parse::<Filling>().unwrap(), f);
        assert!("1\nx".parse::<Filling>().is_err());
    }

    #[test]
    fn json_format() {
        let f = filling(&[&[1], &[], &[3, 1]]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"shape":[1,0,2],"rows":[[1],[],[3,1]]}"#);
        assert_eq!(serde_json::from_str::<Filling>(&json).unwrap(), f);
        assert!(serde_json::from_str::<Filling>(r#"{"shape":[2],"rows":[[1]]}"#).is_err());
    }
}
