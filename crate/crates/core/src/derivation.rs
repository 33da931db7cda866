//! Derived fillings: the bridge from `SSF(α')` to `SSF(α)` across the
//! first ascent of `α`.
//!
//! Let `r` be the first ascent of `α` (`α₁ ≥ … ≥ α_r < α_{r+1}`) and let
//! `α'` swap parts `r` and `r + 1`. For `F' ∈ SSF(α')` with `m` free
//! entries `r` in row `r`, the derived fillings are
//!
//! * `F₀`: `F'` with the last `α_{r+1} − α_r` boxes of row `r` (and their
//!   entries) moved straight down to row `r + 1`;
//! * `F_k = R_{r+1,r}^k(F₀)` for `k = 1, …, m`.
//!
//! As `F'` runs over `SSF(α')` these families partition `SSF(α)`.

use serde::Serialize;

use crate::composition::Composition;
use crate::demazure::smallest_ascent;
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::involution::{classify, lower, raise};

/// First ascent `r` (1-based) of `alpha`, or `None` for a partition.
///
/// The first ascent is the smallest ascent: every earlier step is weakly
/// decreasing by minimality.
pub fn first_ascent(alpha: &Composition) -> Option<usize> {
    smallest_ascent(alpha)
}

/// The ordered derived fillings `F₀, …, F_m` of a source filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedFamily {
    pub source: Filling,
    /// First ascent of the target shape.
    pub r: usize,
    pub members: Vec<Filling>,
}

impl DerivedFamily {
    /// `m`, the number of raising steps.
    pub fn m(&self) -> usize {
        self.members.len() - 1
    }
}

fn ascent_of(alpha: &Composition) -> Result<usize> {
    first_ascent(alpha).ok_or_else(|| Error::IsPartition(alpha.to_string()))
}

fn require_shape(f: &Filling, shape: &Composition) -> Result<()> {
    if f.shape() != shape {
        return Err(Error::ShapeMismatch {
            expected: shape.to_string(),
            found: f.shape().to_string(),
        });
    }
    Ok(())
}

/// Moves the boxes of row `from` beyond column `keep` to row `to`, and
/// relabels the shape as `target`.
fn move_tail(f: &Filling, from: usize, to: usize, keep: usize, target: &Composition) -> Filling {
    let mut out = f.clone();
    let rows = out.rows_mut();
    let tail = rows[from - 1].split_off(keep);
    rows[to - 1].extend(tail);
    out.set_shape(target.clone());
    out
}

/// The derived fillings of `source ∈ SSF(α')` inside `SSF(alpha)`.
pub fn derived_fillings(source: &Filling, alpha: &Composition) -> Result<DerivedFamily> {
    let r = ascent_of(alpha)?;
    let alpha_prime = alpha.swapped(r)?;
    require_shape(source, &alpha_prime)?;
    source.ensure_semistandard()?;

    let m = classify(source, r as u32)?.free_count(source, r, r as u32);
    let f0 = move_tail(source, r, r + 1, alpha.part(r), alpha);
    let mut members = Vec::with_capacity(m + 1);
    members.push(f0);
    for _ in 0..m {
        let next = raise(members.last().unwrap(), r + 1, r as u32)?;
        members.push(next);
    }
    Ok(DerivedFamily {
        source: source.clone(),
        r,
        members,
    })
}

/// Recovers `(F', k)` with `F` the `k`-th derived filling of `F'`.
///
/// `k` is the number of free entries `r + 1` in row `r + 1` of `F`; the
/// filling is lowered `k` times by `L_{r+1,r}` and the last
/// `α_{r+1} − α_r` boxes of row `r + 1` move back up to row `r`.
pub fn inverse_derived(f: &Filling, alpha: &Composition) -> Result<(Filling, usize)> {
    let r = ascent_of(alpha)?;
    require_shape(f, alpha)?;
    f.ensure_semistandard()?;

    let t = r as u32;
    let k = classify(f, t)?.free_count(f, r + 1, t + 1);
    let mut lowered = f.clone();
    for _ in 0..k {
        lowered = lower(&lowered, r + 1, t)?;
    }
    let alpha_prime = alpha.swapped(r)?;
    let source = move_tail(&lowered, r + 1, r, alpha.part(r), &alpha_prime);
    Ok((source, k))
}

/// Builds `SSF(alpha)` by recursing through first ascents from the unique
/// filling of the sorted shape, collecting every derived family.
pub fn generate_inductive(alpha: &Composition) -> Vec<Filling> {
    let Some(r) = first_ascent(alpha) else {
        return vec![Filling::row_constant(alpha)];
    };
    let alpha_prime = alpha.swapped(r).expect("ascent index is in range");
    generate_inductive(&alpha_prime)
        .iter()
        .flat_map(|source| {
            derived_fillings(source, alpha)
                .expect("generated sources are semistandard")
                .members
        })
        .collect()
}
