//! Compositions: the row lengths of a skyline diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of nonnegative parts `(α₁, …, αₙ)` with `n ≥ 1`.
///
/// Part `i` (1-based) is the number of boxes in row `i` of the skyline
/// diagram, and `n` is also the number of variables of every polynomial
/// attached to the composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Length of row `row` (1-based). Rows outside `1..=n` have length 0.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of boxes, `Σ αᵢ`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Longest row length.
    pub fn max_part(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// True when the parts are weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// True when the parts are weakly increasing.
    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    /// The composition with parts `i` and `i + 1` (1-based) exchanged.
    pub fn swapped(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.len() {
            return Err(Error::Parameter(format!(
                "cannot swap parts {i} and {} of a composition with {} parts",
                i + 1,
                self.len()
            )));
        }
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Ok(Self { parts })
    }

    /// Every composition with `1 ≤ n ≤ max_n` parts, each part in
    /// `0..=max_part`, ordered by length and then lexicographically.
    pub fn family(max_n: usize, max_part: usize) -> Vec<Self> {
        let base = max_part + 1;
        let mut out = Vec::new();
        for n in 1..=max_n {
            let total = base.pow(n as u32);
            for code in 0..total {
                let mut parts = vec![0; n];
                let mut rest = code;
                for p in parts.iter_mut().rev() {
                    *p = rest % base;
                    rest /= base;
                }
                out.push(Self { parts });
            }
        }
        out
    }
}

/// Parts sorted weakly decreasing: the partition `λ(α)`.
pub fn lambda_of(alpha: &Composition) -> Composition {
    let mut parts = alpha.parts.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Composition { parts }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list such as `1,3,0,2`. Surrounding
/// parentheses and whitespace are ignored.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}
