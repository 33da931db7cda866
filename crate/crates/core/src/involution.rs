//! Classification of the entries `t` and `t + 1`, the lowering and raising
//! operators, and the involutions built from them.
//!
//! Fix a value `t`. Each column of a semistandard filling holds at most
//! one `t` and at most one `t + 1`. An occurrence of either value is
//!
//! * **paired** when its column holds the other value too;
//! * **pseudo-free** when it is unpaired and belongs to a pseudo-free
//!   pair: an unpaired `t` and an unpaired `t + 1` strictly to its upper
//!   right, with every column strictly between them holding both values;
//! * **free** otherwise.
//!
//! `lower(F, r, t)` turns the rightmost free `t + 1` of row `r` into `t`
//! and `raise(F, r, t)` turns the leftmost free `t` of row `r` into
//! `t + 1`; both also swap `t` and `t + 1` along the run of columns
//! immediately to the left where row `r` holds the moving value with the
//! other value further down. `phi(F, r, t)` applies whichever of the two
//! balances the free counts until the counts are exchanged.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filling::{Cell, Filling};

/// Class of a box holding `t` or `t + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum EntryClass {
    Paired,
    PseudoFree { partner: Cell },
    Free,
}

/// Classes of every box holding `t` or `t + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub t: u32,
    classes: BTreeMap<Cell, EntryClass>,
}

impl Classification {
    pub fn get(&self, cell: Cell) -> Option<EntryClass> {
        self.classes.get(&cell).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, EntryClass)> + '_ {
        self.classes.iter().map(|(&c, &k)| (c, k))
    }

    pub fn is_free(&self, cell: Cell) -> bool {
        self.get(cell) == Some(EntryClass::Free)
    }

    pub fn is_pseudo_free(&self, cell: Cell) -> bool {
        matches!(self.get(cell), Some(EntryClass::PseudoFree { .. }))
    }

    /// Columns (ascending) of the free entries equal to `value` in `row`.
    pub fn free_columns(&self, f: &Filling, row: usize, value: u32) -> Vec<usize> {
        (1..=f.row(row).len())
            .filter(|&col| f.get(row, col) == Some(value) && self.is_free(Cell::new(row, col)))
            .collect()
    }

    /// Number of free entries equal to `value` in `row`.
    pub fn free_count(&self, f: &Filling, row: usize, value: u32) -> usize {
        self.free_columns(f, row, value).len()
    }

    pub fn pseudo_free_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.iter()
            .filter(|(_, k)| matches!(k, EntryClass::PseudoFree { .. }))
            .map(|(c, _)| c)
    }
}

fn require_semistandard(f: &Filling) -> Result<()> {
    f.ensure_semistandard()
}

fn column_has(f: &Filling, col: usize, value: u32) -> bool {
    f.find_in_column(col, value).is_some()
}

fn unpaired_classes(f: &Filling, t: u32) -> BTreeMap<Cell, EntryClass> {
    let mut classes = BTreeMap::new();
    for (cell, e) in f.cells() {
        if e == t || e == t + 1 {
            let other = if e == t { t + 1 } else { t };
            let class = if column_has(f, cell.col, other) {
                EntryClass::Paired
            } else {
                EntryClass::Free
            };
            classes.insert(cell, class);
        }
    }
    classes
}

fn mark_pair(classes: &mut BTreeMap<Cell, EntryClass>, low: Cell, high: Cell) {
    classes.insert(low, EntryClass::PseudoFree { partner: high });
    classes.insert(high, EntryClass::PseudoFree { partner: low });
}

/// Classifies every `t` and `t + 1` straight from the definition: for each
/// unpaired `t`, walk right across columns holding both values and test
/// whether the first other column holds an unpaired `t + 1` higher up.
pub fn classify(f: &Filling, t: u32) -> Result<Classification> {
    if t == 0 {
        return Err(Error::Parameter("t must be at least 1".into()));
    }
    require_semistandard(f)?;
    let mut classes = unpaired_classes(f, t);
    let max_col = f.shape().max_part();
    let lows: Vec<Cell> = classes
        .iter()
        .filter(|&(&c, &k)| k == EntryClass::Free && f.at(c) == Some(t))
        .map(|(&c, _)| c)
        .collect();
    for low in lows {
        for col in low.col + 1..=max_col {
            let has_low = column_has(f, col, t);
            let high_row = f.find_in_column(col, t + 1);
            match (has_low, high_row) {
                (true, Some(_)) => continue,
                (false, Some(row)) if row < low.row => {
                    mark_pair(&mut classes, low, Cell::new(row, col));
                    break;
                }
                _ => break,
            }
        }
    }
    Ok(Classification { t, classes })
}

/// Same classification, found through the row-walk characterization: an
/// unpaired `t` at `(i, j)` is pseudo-free with partner in row `i' < i`
/// iff `F(i', j + 1) = t + 1`; the partner is then the first `t + 1` along
/// row `i'` whose column holds no `t`.
pub fn classify_via_row_walk(f: &Filling, t: u32) -> Result<Classification> {
    if t == 0 {
        return Err(Error::Parameter("t must be at least 1".into()));
    }
    require_semistandard(f)?;
    let mut classes = unpaired_classes(f, t);
    let lows: Vec<Cell> = classes
        .iter()
        .filter(|&(&c, &k)| k == EntryClass::Free && f.at(c) == Some(t))
        .map(|(&c, _)| c)
        .collect();
    for low in lows {
        let Some(start) = (1..low.row).find(|&i| f.get(i, low.col + 1) == Some(t + 1)) else {
            continue;
        };
        let mut col = low.col + 1;
        while f.get(start, col) == Some(t + 1) {
            if !column_has(f, col, t) {
                mark_pair(&mut classes, low, Cell::new(start, col));
                break;
            }
            col += 1;
        }
    }
    Ok(Classification { t, classes })
}

fn check_row(f: &Filling, r: usize) -> Result<()> {
    if r == 0 || r > f.num_rows() {
        return Err(Error::Parameter(format!(
            "row {r} is outside 1..={}",
            f.num_rows()
        )));
    }
    Ok(())
}

/// Moves `from` to `to` at column `col` of `row`, and swaps `t`/`t + 1`
/// down the run of columns to its left.
fn shift(f: &Filling, row: usize, col: usize, from: u32, to: u32) -> Filling {
    let mut out = f.clone();
    out.set(Cell::new(row, col), to);
    let mut k = col - 1;
    while k >= 1 && f.get(row, k) == Some(from) {
        let Some(below) = f.find_in_column(k, to).filter(|&i| i > row) else {
            break;
        };
        out.set(Cell::new(row, k), to);
        out.set(Cell::new(below, k), from);
        k -= 1;
    }
    out
}

/// The lowering operator `L_{r,t}`. Returns `F` unchanged when row `r` has
/// no free `t + 1`. Requires `t ≤ r ≤ n`.
pub fn lower(f: &Filling, r: usize, t: u32) -> Result<Filling> {
    check_row(f, r)?;
    if t == 0 || (r as u32) < t {
        return Err(Error::Parameter(format!(
            "lowering needs 1 <= t <= r, got r={r}, t={t}"
        )));
    }
    let class = classify(f, t)?;
    Ok(lower_with(f, &class, r))
}

fn lower_with(f: &Filling, class: &Classification, r: usize) -> Filling {
    let t = class.t;
    match class.free_columns(f, r, t + 1).last() {
        None => f.clone(),
        Some(&j) => shift(f, r, j, t + 1, t),
    }
}

/// The raising operator `R_{r,t}`. Returns `F` unchanged when row `r` has
/// no free `t`. Requires `t + 1 ≤ r ≤ n`.
pub fn raise(f: &Filling, r: usize, t: u32) -> Result<Filling> {
    check_row(f, r)?;
    if t == 0 || (r as u32) < t + 1 {
        return Err(Error::Parameter(format!(
            "raising needs 1 <= t < r, got r={r}, t={t}"
        )));
    }
    let class = classify(f, t)?;
    Ok(raise_with(f, &class, r))
}

fn raise_with(f: &Filling, class: &Classification, r: usize) -> Filling {
    let t = class.t;
    match class.free_columns(f, r, t).first() {
        None => f.clone(),
        Some(&j) => shift(f, r, j, t, t + 1),
    }
}

/// Free counts `(n₁, n₂)` of `t + 1` and `t` in row `r`.
pub fn free_counts(f: &Filling, r: usize, t: u32) -> Result<(usize, usize)> {
    check_row(f, r)?;
    let class = classify(f, t)?;
    Ok((class.free_count(f, r, t + 1), class.free_count(f, r, t)))
}

/// Every intermediate filling of `phi(F, r, t)`, starting with `F` itself
/// and ending with the image.
pub fn phi_trace(f: &Filling, r: usize, t: u32) -> Result<Vec<Filling>> {
    check_row(f, r)?;
    if t == 0 || (r as u32) < t + 1 {
        return Err(Error::Parameter(format!(
            "phi needs 1 <= t < r, got r={r}, t={t}"
        )));
    }
    let class = classify(f, t)?;
    let n1 = class.free_count(f, r, t + 1);
    let n2 = class.free_count(f, r, t);
    let mut steps = vec![f.clone()];
    let mut current = f.clone();
    let mut class = class;
    for _ in 0..n1.abs_diff(n2) {
        let next = if n1 > n2 {
            assert!(
                class.free_count(&current, r, t + 1) > 0,
                "lowering step found no free {} in row {r}",
                t + 1
            );
            lower_with(&current, &class, r)
        } else {
            assert!(
                class.free_count(&current, r, t) > 0,
                "raising step found no free {t} in row {r}"
            );
            raise_with(&current, &class, r)
        };
        class = classify(&next, t).expect("operator left the semistandard set");
        steps.push(next.clone());
        current = next;
    }
    Ok(steps)
}

/// The involution `Φ_{r,t}`: with `n₁` free `t + 1` and `n₂` free `t` in
/// row `r`, lowers `n₁ − n₂` times or raises `n₂ − n₁` times.
pub fn phi(f: &Filling, r: usize, t: u32) -> Result<Filling> {
    Ok(phi_trace(f, r, t)?.pop().expect("trace is never empty"))
}

/// The row involution `Φ_r`: `Φ_{i,r}` for every row `i = r + 1, …, n`,
/// applied in ascending `i`.
pub fn phi_row(f: &Filling, r: usize) -> Result<Filling> {
    phi_row_ordered(f, r, false)
}

/// `Φ_r` with the factors applied in descending row order instead.
pub fn phi_row_descending(f: &Filling, r: usize) -> Result<Filling> {
    phi_row_ordered(f, r, true)
}

fn phi_row_ordered(f: &Filling, r: usize, descending: bool) -> Result<Filling> {
    let n = f.num_rows();
    if r == 0 || r >= n {
        return Err(Error::Parameter(format!(
            "row involution needs 1 <= r < n = {n}, got {r}"
        )));
    }
    let mut rows: Vec<usize> = (r + 1..=n).collect();
    if descending {
        rows.reverse();
    }
    let mut out = f.clone();
    for i in rows {
        out = phi(&out, i, r as u32)?;
    }
    Ok(out)
}

/// Text form of `f` with `*` after free and `~` after pseudo-free entries.
pub fn render_classified(f: &Filling, class: &Classification) -> String {
    f.render_annotated(|cell| match class.get(cell) {
        Some(EntryClass::Free) => "*",
        Some(EntryClass::PseudoFree { .. }) => "~",
        _ => "",
    })
}
