//! Exact computer algebra for free perm algebras.
//!
//! A perm algebra is an associative algebra satisfying `abc = acb`. This
//! crate provides canonical arithmetic in the free perm algebra over the
//! rationals, decision procedures for Lie and Jordan elements, identity
//! verification, and the universal enveloping perm algebra of a
//! finite-dimensional metabelian Lie algebra via a dotted-word rewriting
//! system.

pub mod alphabet;
pub mod bracket;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod jordan;
pub mod lie;
pub mod parse;
pub mod perm;
pub mod rational;

pub use alphabet::Alphabet;
pub use bracket::{BracketExpr, CheckMode, IdentityTemplate};
pub use error::{Error, Result};
pub use perm::{Multidegree, PermMonomial, PermPolynomial, Subspace};
pub use rational::Rational;
