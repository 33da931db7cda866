//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's enumeration, validation or classification code.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Conditions (i)-(iv) checked straight from their statements on raw rows
/// (row `i` of the slice is row `i + 1` of the diagram).
pub fn is_ssf(rows: &[Vec<u32>]) -> bool {
    let entry = |i: usize, j: usize| rows.get(i).and_then(|r| r.get(j)).copied();
    for (i, row) in rows.iter().enumerate() {
        if row.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        if row.iter().any(|&e| e == 0 || e as usize > i + 1) {
            return false;
        }
    }
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for j in 0..width {
        for lower in 0..rows.len() {
            for upper in 0..lower {
                let (Some(b), Some(a)) = (entry(upper, j), entry(lower, j)) else {
                    continue;
                };
                if a == b {
                    return false;
                }
                // a below b with a < b: the box right of b must hold c > a
                if a < b {
                    match entry(upper, j + 1) {
                        Some(c) if c > a => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

/// Every filling of the given shape with `1 <= F(i,j) <= i` satisfying
/// [`is_ssf`], by exhaustive product over all flag-bounded fillings.
pub fn brute_force_ssf(shape: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&p| vec![1; p]).collect();
    loop {
        if is_ssf(&rows) {
            out.push(rows.clone());
        }
        // odometer over the cells
        let mut k = 0;
        loop {
            if k == cells.len() {
                return out;
            }
            let (i, j) = cells[k];
            if rows[i][j] < (i + 1) as u32 {
                rows[i][j] += 1;
                break;
            }
            rows[i][j] = 1;
            k += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Paired,
    PseudoFree,
    Free,
}

/// Classification of every `t` and `t + 1` by the definitions: paired if
/// its column holds both values; an unpaired `t` and an unpaired `t + 1`
/// strictly upper-right of it form a pseudo-free pair when every column
/// strictly between them holds both values.
pub fn classify_by_definition(rows: &[Vec<u32>], t: u32) -> BTreeMap<(usize, usize), Kind> {
    let col_has = |j: usize, v: u32| rows.iter().any(|r| r.get(j) == Some(&v));
    let mut kinds = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e == t || e == t + 1 {
                let paired = col_has(j, t) && col_has(j, t + 1);
                kinds.insert((i, j), if paired { Kind::Paired } else { Kind::Free });
            }
        }
    }
    let unpaired: Vec<((usize, usize), u32)> = kinds
        .iter()
        .filter(|(_, k)| **k == Kind::Free)
        .map(|(&c, _)| (c, rows[c.0][c.1]))
        .collect();
    for &((i, j), a) in &unpaired {
        for &((i2, j2), b) in &unpaired {
            if a == t
                && b == t + 1
                && i2 < i
                && j2 > j
                && (j + 1..j2).all(|k| col_has(k, t) && col_has(k, t + 1))
            {
                kinds.insert((i, j), Kind::PseudoFree);
                kinds.insert((i2, j2), Kind::PseudoFree);
            }
        }
    }
    kinds
}

/// `(free t + 1, free t)` in row `r` (1-based) under [`classify_by_definition`].
pub fn free_counts(rows: &[Vec<u32>], r: usize, t: u32) -> (usize, usize) {
    let kinds = classify_by_definition(rows, t);
    let count = |v: u32| {
        rows[r - 1]
            .iter()
            .enumerate()
            .filter(|&(j, &e)| e == v && kinds[&(r - 1, j)] == Kind::Free)
            .count()
    };
    (count(t + 1), count(t))
}

/// Exponent vector of a filling: `x_v` raised to the number of entries `v`.
pub fn weight_of(rows: &[Vec<u32>], n: usize) -> Vec<u32> {
    let mut w = vec![0; n];
    for &e in rows.iter().flatten() {
        w[e as usize - 1] += 1;
    }
    w
}
