//! Divided differences, Demazure operators and key polynomials.

use crate::composition::Composition;
use crate::enumerate::enumerate_ssf;
use crate::error::Result;
use crate::filling::weight;
use crate::polynomial::{ExponentVector, Polynomial};

/// `s_i f`: exchanges `x_i` and `x_{i+1}`. Requires `1 ≤ i < n`.
pub fn swap_vars(f: &Polynomial, i: usize) -> Result<Polynomial> {
    f.swap_variables(i)
}

/// `∂_i f = (f − s_i f) / (x_i − x_{i+1})`.
///
/// The numerator is antisymmetric in `x_i, x_{i+1}`, so the division is
/// always exact; a remainder means the arithmetic is broken and panics.
pub fn divided_difference(f: &Polynomial, i: usize) -> Result<Polynomial> {
    let numerator = f - &swap_vars(f, i)?;
    Ok(numerator
        .div_by_difference(i)
        .expect("antisymmetric numerator must be divisible by x_i - x_{i+1}"))
}

/// The Demazure operator `π_i f = ∂_i(x_i f)`.
pub fn pi(f: &Polynomial, i: usize) -> Result<Polynomial> {
    f.check_index(i)?;
    divided_difference(&f.mul_monomial(&ExponentVector::variable(f.arity(), i)), i)
}

/// `x^α` as a polynomial in `n = len(α)` variables.
pub fn monomial_of(alpha: &Composition) -> Polynomial {
    let exps = alpha.parts().iter().map(|&p| p as u32).collect();
    Polynomial::monomial(ExponentVector::new(exps), 1)
}

/// Smallest `i` (1-based) with `α_i < α_{i+1}`.
pub fn smallest_ascent(alpha: &Composition) -> Option<usize> {
    alpha
        .parts()
        .windows(2)
        .position(|w| w[0] < w[1])
        .map(|i| i + 1)
}

/// The key polynomial `κ_α` from its recursive definition: `x^α` for a
/// partition, otherwise `π_i κ_{α'}` where `i` is the smallest ascent of
/// `α` and `α'` swaps parts `i` and `i + 1`.
pub fn key_recursive(alpha: &Composition) -> Polynomial {
    // unwind the chain of ascents down to the partition, then apply the
    // operators back up
    let mut chain = Vec::new();
    let mut current = alpha.clone();
    while let Some(i) = smallest_ascent(&current) {
        chain.push(i);
        current = current.swapped(i).expect("ascent index is in range");
    }
    let mut poly = monomial_of(&current);
    for &i in chain.iter().rev() {
        poly = pi(&poly, i).expect("ascent index is in range");
    }
    poly
}

/// `Σ x^F` over the semistandard skyline fillings of shape `α`.
pub fn key_combinatorial(alpha: &Composition) -> Polynomial {
    let n = alpha.len();
    let mut poly = Polynomial::zero(n);
    for f in enumerate_ssf(alpha) {
        poly.add_term(weight(&f), 1);
    }
    poly
}
