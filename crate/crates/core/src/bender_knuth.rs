//! The classical Bender–Knuth move on reverse semistandard tableaux.
//!
//! When `α` is weakly increasing, turning a filling of `SSF(α)` upside
//! down gives a reverse semistandard Young tableau of the partition shape
//! `α` reversed: rows weakly decreasing, columns strictly decreasing. This
//! module works on that tableau directly and does not use the entry
//! classification of [`crate::involution`].

use crate::filling::Filling;

/// A reverse semistandard tableau, rows listed from the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseTableau {
    rows: Vec<Vec<u32>>,
}

impl ReverseTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows weakly decreasing, columns strictly decreasing, shape a
    /// partition.
    pub fn is_reverse_semistandard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below < above));
        shape_ok && rows_ok && cols_ok
    }

    /// The single-row Bender–Knuth move on row `row` (0-based from the top)
    /// for the values `t` and `t + 1`.
    ///
    /// A `t + 1` with a `t` directly below it, or a `t` with a `t + 1`
    /// directly above it, is locked. The remaining ones form a contiguous
    /// block of `n₁` copies of `t + 1` followed by `n₂` copies of `t`,
    /// which is rewritten as `n₂` copies of `t + 1` followed by `n₁` of `t`.
    pub fn bender_knuth_row(&self, row: usize, t: u32) -> Self {
        let mut out = self.clone();
        let below = self.rows.get(row + 1);
        let above = row.checked_sub(1).map(|i| &self.rows[i]);
        let free: Vec<usize> = self.rows[row]
            .iter()
            .enumerate()
            .filter(|&(j, &e)| {
                if e == t + 1 {
                    below.and_then(|b| b.get(j)) != Some(&t)
                } else if e == t {
                    above.and_then(|a| a.get(j)) != Some(&(t + 1))
                } else {
                    false
                }
            })
            .map(|(j, _)| j)
            .collect();
        let n1 = free.iter().filter(|&&j| self.rows[row][j] == t + 1).count();
        let n2 = free.len() - n1;
        for (idx, &j) in free.iter().enumerate() {
            out.rows[row][j] = if idx < n2 { t + 1 } else { t };
        }
        debug_assert_eq!(n1 + n2, free.len());
        out
    }
}

/// `F` turned upside down: row `i` of the result is row `n + 1 − i` of `F`.
pub fn reflect(f: &Filling) -> ReverseTableau {
    ReverseTableau::new(f.rows().iter().rev().cloned().collect())
}

/// Inverse of [`reflect`].
pub fn unreflect(t: &ReverseTableau) -> Vec<Vec<u32>> {
    t.rows.iter().rev().cloned().collect()
}

/// Counts reverse semistandard tableaux of partition shape `shape` with
/// entries in `1..=max_entry`, by direct backtracking over the boxes.
pub fn count_reverse_ssyt(shape: &[usize], max_entry: u32) -> usize {
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut count = 0;
    count_rec(shape, max_entry, &mut rows, &mut count);
    count
}

fn count_rec(shape: &[usize], max_entry: u32, rows: &mut Vec<Vec<u32>>, count: &mut usize) {
    let Some(row) = (0..shape.len()).find(|&i| rows[i].len() < shape[i]) else {
        *count += 1;
        return;
    };
    let col = rows[row].len();
    for e in 1..=max_entry {
        let left_ok = rows[row].last().is_none_or(|&l| e <= l);
        let up_ok = row == 0 || e < rows[row - 1][col];
        if left_ok && up_ok {
            rows[row].push(e);
            count_rec(shape, max_entry, rows, count);
            rows[row].pop();
        }
    }
}
