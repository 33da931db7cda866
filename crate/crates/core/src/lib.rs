//! Semistandard skyline fillings, the involution `Φ_{r,t}` built from the
//! lowering and raising operators, derived fillings, and an exact
//! polynomial engine for divided differences and Demazure operators.
//!
//! The key polynomial of a composition `α` has two descriptions that this
//! crate computes independently and compares:
//!
//! * recursively, starting from `x^α` for a partition and applying the
//!   Demazure operator `π_i = ∂_i x_i` at an ascent;
//! * combinatorially, as the sum of `x^F` over the semistandard skyline
//!   fillings `F` of shape `α`.
//!
//! ```
//! use skyline::{key_combinatorial, key_recursive, Composition};
//!
//! let alpha: Composition = "1,3,0,2".parse().unwrap();
//! assert_eq!(key_recursive(&alpha), key_combinatorial(&alpha));
//! ```
//!
//! The guide in `book/` walks through each construction.

pub mod bender_knuth;
pub mod composition;
pub mod demazure;
pub mod derivation;
pub mod enumerate;
pub mod error;
pub mod filling;
pub mod involution;
pub mod polynomial;
pub mod verify;

pub use composition::{lambda_of, Composition};
pub use demazure::{divided_difference, key_combinatorial, key_recursive, pi, swap_vars};
pub use derivation::{
    derived_fillings, first_ascent, generate_inductive, inverse_derived, DerivedFamily,
};
pub use enumerate::enumerate_ssf;
pub use error::{Error, Result};
pub use filling::{
    check_non_attacking, validate_filling, weight, Cell, Filling, ValidationReport, Violation,
};
pub use involution::{classify, lower, phi, phi_row, raise, Classification, EntryClass};
pub use polynomial::{ExponentVector, Polynomial};
pub use verify::{bender_knuth_check, verify_pi_identity, Check, VerificationReport};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fillings.md")]
    mod fillings {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/involution.md")]
    mod involution {}
    #[doc = include_str!("../../../book/src/derived.md")]
    mod derived {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
