//! The free perm algebra P(X): associative algebras with `abc = acb`.
//!
//! Right-commutativity means every word is determined by its first letter
//! and the multiset of the remaining letters, so monomials are stored as a
//! head generator plus a sorted tail.

mod basis;
mod linalg;
mod monomial;
mod polynomial;

pub use basis::{dimension, enumerate_basis, Multidegree};
pub(crate) use basis::sorted_sequences as basis_sequences;
pub use linalg::{solve_linear, span_solve, Ambient, Subspace};
pub use monomial::{canonicalize, PermMonomial};
pub use polynomial::PermPolynomial;
