//! Exhaustive enumeration of semistandard skyline fillings.

use crate::composition::Composition;
use crate::filling::{validate_filling, Filling};

/// Every semistandard filling of shape `alpha`, each exactly once, in
/// descending lexicographic order of the row-major reading word.
///
/// Boxes are filled row by row, left to right, trying larger entries
/// first. A candidate entry `e` at `(i, j)` is bounded by the flag
/// condition and the entry to its left, must not repeat in column `j`,
/// and must satisfy condition (iv) against every box above it. Since all
/// rows above are complete at that point, the check is exact and no dead
/// branches reach a leaf.
pub fn enumerate_ssf(alpha: &Composition) -> Vec<Filling> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = alpha
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p))
        .collect();
    fill(alpha, &mut rows, 0, &mut out);
    out
}

/// Number of semistandard fillings of shape `alpha`.
pub fn count_ssf(alpha: &Composition) -> usize {
    enumerate_ssf(alpha).len()
}

fn fill(alpha: &Composition, rows: &mut Vec<Vec<u32>>, row: usize, out: &mut Vec<Filling>) {
    // skip complete rows
    let mut row = row;
    while row < rows.len() && rows[row].len() == alpha.parts()[row] {
        row += 1;
    }
    if row == rows.len() {
        let f = Filling::from_parts_unchecked(alpha.clone(), rows.clone());
        debug_assert!(
            validate_filling(&f).is_ok(),
            "enumerated an invalid filling:\n{f}"
        );
        out.push(f);
        return;
    }

    let col = rows[row].len();
    let cap = rows[row].last().copied().unwrap_or(row as u32 + 1);
    for e in (1..=cap).rev() {
        if admissible(rows, row, col, e) {
            rows[row].push(e);
            fill(alpha, rows, row, out);
            rows[row].pop();
        }
    }
}

/// Column distinctness and condition (iv) for `e` placed at 0-based
/// `(row, col)` against the complete rows above.
fn admissible(rows: &[Vec<u32>], row: usize, col: usize, e: u32) -> bool {
    rows[..row].iter().all(|above| match above.get(col) {
        None => true,
        Some(&b) if b == e => false,
        Some(&b) if e < b => above.get(col + 1).is_some_and(|&c| c > e),
        Some(_) => true,
    })
}
