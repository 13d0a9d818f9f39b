//! Exact computer algebra for iterated rational functions.
//!
//! The crate provides:
//! - [`field`]: prime fields F_p, extensions F_{p^k}, and arbitrary-precision
//!   rationals behind one immutable [`field::FieldSpec`] value.
//! - [`poly`] and [`factor`]: dense univariate arithmetic (gcd, radical,
//!   resultant, valuation) and seedable factorization over finite fields.
//! - [`ratfunc`]: rational functions in lowest terms, composition with its
//!   normal-form trace, iteration, and projective evaluation.
//! - [`iterinv`]: orbit invariants of an iterated map, the excluded
//!   exceptional shapes, and the iterate-degree lower bound d^(n−j).
//! - [`mdep`]: exact multiplicative-(in)dependence testing via gcd-free
//!   bases and integer kernels, with certified witnesses.
//! - [`highorder`]: construction and verification of high-order elements
//!   of F_{q^n}, plus the empirical pair scan.
//! - [`bivar`]: Res_Y, degree/count bounds for multiplicatively dependent
//!   shifts, and a Mason–Stothers checker (characteristic 0).
//!
//! All arithmetic is exact; randomized paths take explicit seeds.

pub mod bivar;
pub mod error;
pub mod factor;
pub mod field;
pub mod highorder;
pub mod intfactor;
pub mod iterinv;
pub mod mdep;
pub mod poly;
pub mod ratfunc;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
