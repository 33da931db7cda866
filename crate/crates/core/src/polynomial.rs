//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Coefficients are `i64` with checked arithmetic: an overflow panics
//! instead of wrapping. Every polynomial has a fixed arity `n`, and
//! combining polynomials of different arity is an error.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Exponents of `x₁, …, xₙ`.
///
/// Ordered graded-lexicographically with `x₁ > x₂ > … > xₙ`: higher total
/// degree first, ties broken by the first differing exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The single variable `x_var` (1-based) in `n` variables.
    pub fn variable(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var - 1] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent of `x_var` (1-based).
    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    /// The exponent vector with variables `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        Self(e)
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `ℤ[x₁, …, xₙ]`. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<ExponentVector, i64>,
}

fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow in addition")
}

fn mul_coeff(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("coefficient overflow in multiplication")
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(ExponentVector::one(arity), 1)
    }

    pub fn monomial(exps: ExponentVector, coeff: i64) -> Self {
        let mut p = Self::zero(exps.arity());
        if coeff != 0 {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// The variable `x_var` (1-based).
    pub fn variable(arity: usize, var: usize) -> Self {
        Self::monomial(ExponentVector::variable(arity, var), 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, i64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch(arity, e.len()));
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (0 if absent).
    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms
            .get(&ExponentVector(exps.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Terms in canonical order, highest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, i64)> + '_ {
        self.terms.iter().rev().map(|(e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exps: ExponentVector, coeff: i64) {
        assert_eq!(exps.arity(), self.arity, "monomial arity mismatch");
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exps);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = add_coeff(*o.get(), coeff);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.arity, other.arity))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c.checked_neg().expect("coefficient overflow"));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), mul_coeff(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), mul_coeff(c, k));
        }
        out
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn mul_monomial(&self, exps: &ExponentVector) -> Self {
        assert_eq!(exps.arity(), self.arity, "monomial arity mismatch");
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, &c)| (e.mul(exps), c)).collect(),
        }
    }

    /// Divides every coefficient by `k`, or returns `None` if any division
    /// is inexact.
    pub fn div_exact_scalar(&self, k: i64) -> Option<Self> {
        let mut out = Self::zero(self.arity);
        for (e, &c) in &self.terms {
            if k == 0 || c % k != 0 {
                return None;
            }
            out.add_term(e.clone(), c / k);
        }
        Some(out)
    }

    /// Divides by `x_var^power`, or returns `None` when some term has a
    /// smaller exponent of `x_var`.
    pub fn div_variable_power(&self, var: usize, power: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, &c) in &self.terms {
            let mut v = e.0.clone();
            v[var - 1] = v[var - 1].checked_sub(power)?;
            terms.insert(ExponentVector(v), c);
        }
        Some(Self {
            arity: self.arity,
            terms,
        })
    }

    /// Exchanges `x_i` and `x_{i+1}` in every monomial.
    pub fn swap_variables(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        Ok(Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, &c)| (e.swapped(i), c)).collect(),
        })
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.arity {
            Err(Error::Parameter(format!(
                "variable index {i} is outside 1..{} for {} variables",
                self.arity, self.arity
            )))
        } else {
            Ok(())
        }
    }

    /// Exact quotient by `x_i − x_{i+1}`.
    ///
    /// Repeatedly cancels the term with the largest power of `x_i` (ties
    /// broken by the canonical order) against a multiple of the divisor.
    /// Fails with [`Error::InexactDivision`] if a term free of `x_i`
    /// survives, which is exactly when the divisor does not divide.
    pub fn div_by_difference(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.arity);
        loop {
            let lead = rest
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a.0[i - 1].cmp(&b.0[i - 1]).then_with(|| a.cmp(b)))
                .map(|(e, &c)| (e.clone(), c));
            let Some((lead, c)) = lead else {
                return Ok(quotient);
            };
            if lead.0[i - 1] == 0 {
                return Err(Error::InexactDivision(i, i + 1));
            }
            let mut q = lead.0.clone();
            q[i - 1] -= 1;
            let q = ExponentVector(q);
            // rest -= c·x^q·(x_i − x_{i+1})
            rest.add_term(lead, c.checked_neg().expect("coefficient overflow"));
            let mut shifted = q.0.clone();
            shifted[i] += 1;
            rest.add_term(ExponentVector(shifted), c);
            quotient.add_term(q, c);
        }
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Parses the canonical text form in `arity` variables.
    pub fn parse(s: &str, arity: usize) -> Result<Self> {
        parse_polynomial(s, arity)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics on arity mismatch; see the `try_` variant.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial arity mismatch")
            }
        }

        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::iter::Sum for Polynomial {
    /// Panics on an empty iterator, whose arity is unknown.
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Self {
        let mut acc = iter.next().expect("sum of no polynomials");
        for p in iter {
            acc.check_arity(&p).expect("polynomial arity mismatch");
            for (e, c) in p.terms {
                acc.add_term(e, c);
            }
        }
        acc
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (v, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", v + 1)?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text form, e.g. `x1^2 + 2*x1*x2 - x2^2`. The zero polynomial
/// prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (idx, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if e.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

fn parse_polynomial(s: &str, arity: usize) -> Result<Polynomial> {
    let err = |msg: String| Error::Parse(msg);
    let s = s.trim();
    if s.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    // split into signed terms on + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut sign: Option<bool> = None;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if !current.trim().is_empty() {
                    terms.push((sign.unwrap_or(false), std::mem::take(&mut current)));
                } else if sign.is_some() || !terms.is_empty() || ch == '+' {
                    return Err(err(format!("misplaced sign in {s:?}")));
                }
                current.clear();
                sign = Some(ch == '-');
            }
            c => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(err(format!("dangling sign in {s:?}")));
    }
    terms.push((sign.unwrap_or(false), current));

    let mut p = Polynomial::zero(arity);
    for (neg, body) in terms {
        let mut coeff: i64 = 1;
        let mut exps = vec![0u32; arity];
        for factor in body.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(err(format!("empty factor in {body:?}")));
            }
            if let Some(var) = factor.strip_prefix('x') {
                let (idx, pow) = match var.split_once('^') {
                    Some((idx, pow)) => (idx, pow),
                    None => (var, "1"),
                };
                let idx: usize = idx
                    .parse()
                    .map_err(|_| err(format!("bad variable {factor:?}")))?;
                let pow: u32 = pow
                    .parse()
                    .map_err(|_| err(format!("bad exponent {factor:?}")))?;
                if idx == 0 || idx > arity {
                    return Err(err(format!("variable x{idx} outside 1..={arity}")));
                }
                exps[idx - 1] += pow;
            } else {
                let k: i64 = factor
                    .parse()
                    .map_err(|_| err(format!("bad coefficient {factor:?}")))?;
                coeff = mul_coeff(coeff, k);
            }
        }
        if neg {
            coeff = -coeff;
        }
        p.add_term(ExponentVector(exps), coeff);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(arity: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(arity, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    #[test]
    fn canonical_printing() {
        let p = poly(2, &[(&[0, 2], 1), (&[1, 1], 1), (&[2, 0], 1)]);
        assert_eq!(p.to_string(), "x1^2 + x1*x2 + x2^2");
        let q = poly(3, &[(&[0, 0, 0], -4), (&[1, 0, 0], 3), (&[0, 1, 1], -1)]);
        assert_eq!(q.to_string(), "-x2*x3 + 3*x1 - 4");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(Polynomial::one(2).to_string(), "1");
    }

    #[test]
    fn parse_examples() {
        let p = Polynomial::parse("x1^2 + x1*x2 + x2^2", 2).unwrap();
        assert_eq!(p.coeff(&[1, 1]), 1);
        assert_eq!(p.num_terms(), 3);
        let q = Polynomial::parse("-x2*x3 + 3*x1 - 4", 3).unwrap();
        assert_eq!(q.coeff(&[0, 0, 0]), -4);
        assert_eq!(q.coeff(&[0, 1, 1]), -1);
        assert_eq!(Polynomial::parse("0", 2).unwrap(), Polynomial::zero(2));
        assert!(Polynomial::parse("x3", 2).is_err());
        assert!(Polynomial::parse("x1 +", 2).is_err());
        assert!(Polynomial::parse("", 2).is_err());
    }

    #[test]
    fn arity_is_checked() {
        let a = Polynomial::one(2);
        let b = Polynomial::one(3);
        assert_eq!(a.try_add(&b), Err(Error::ArityMismatch(2, 3)));
        assert_eq!(a.try_mul(&b), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let p = Polynomial::monomial(ExponentVector::one(1), i64::MAX);
        let _ = &p + &p;
    }

    #[test]
    fn division_by_difference() {
        // x1^3 - x2^3 = (x1 - x2)(x1^2 + x1 x2 + x2^2)
        let p = poly(2, &[(&[3, 0], 1), (&[0, 3], -1)]);
        let q = p.div_by_difference(1).unwrap();
        assert_eq!(q.to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(
            Polynomial::variable(2, 1).div_by_difference(1),
            Err(Error::InexactDivision(1, 2))
        );
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        (2usize..=4).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(0u32..=3, n), -9i64..=9), 0..8)
                .prop_map(move |terms| Polynomial::from_terms(n, terms).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly()) {
            let text = p.to_string();
            prop_assert_eq!(Polynomial::parse(&text, p.arity()).unwrap(), p);
        }

        #[test]
        fn multiply_then_divide(p in arb_poly(), i in 1usize..4) {
            prop_assume!(i < p.arity());
            let diff = &Polynomial::variable(p.arity(), i) - &Polynomial::variable(p.arity(), i + 1);
            prop_assert_eq!((&p * &diff).div_by_difference(i).unwrap(), p);
        }
    }
}
