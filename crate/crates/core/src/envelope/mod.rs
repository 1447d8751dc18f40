//! Universal enveloping perm algebras of metabelian Lie algebras.
//!
//! Perm words are modeled as commutative monomials that are linear in
//! dotted letters. With a basis `Y ∪ Z` where `Y` spans `[L, L]`, the
//! relations `ẏ z = [y, z]˙` and `ż_i z_j = ż_j z_i + [z_i, z_j]˙` (`i > j`),
//! together with `y = 0` for undotted `y ∈ Y`, form a complete rewriting
//! system.

mod algebra;
mod dense;
mod growth;
mod rewrite;

pub use algebra::{BasisSplit, MetabelianLieAlgebra, SplitSummary, Validation};
pub use growth::{basis_count, basis_up_to, gk_estimate, GrowthReport};
pub use rewrite::{
    Composition, CompositionReport, EmbedPair, EmbedReport, Envelope, EnvelopeMonomial, EnvelopePolynomial,
    RewriteRule, Strategy,
};
