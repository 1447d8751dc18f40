//! The anticommutator side of P(X): Jordan elements, degree-truncated ideals
//! and the commutative algebra J(X) with its monomial basis B_n(X).

mod bn;
mod ideal;
mod identities;
mod sj;

pub use bn::{bn_basis, low_degree_basis, to_bn, BnCombination, FElement};
pub use ideal::{cohn_witness, ideal_component, CohnReport, IdealAmbient, DEFAULT_DEGREE_BOUND};
pub use identities::{
    identity_suite, verify_j_identities, verify_perm_plus_identities, ExpansionCheck, IdentityReport,
};
pub use sj::{jordan_express, jordan_express_with, sj_span, SjSpan, SjTable};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::alphabet::Alphabet;
use crate::bracket::BracketExpr;
use crate::perm::PermPolynomial;
use crate::rational::{format_sum, ratio, int, Rational};

/// A bracketing of generators under the anticommutator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JordanTree {
    Gen(u32),
    Anti(Box<JordanTree>, Box<JordanTree>),
}

impl JordanTree {
    pub fn anti(a: JordanTree, b: JordanTree) -> Self {
        Self::Anti(Box::new(a), Box::new(b))
    }

    pub fn expand(&self) -> PermPolynomial {
        match self {
            Self::Gen(i) => PermPolynomial::generator(*i).expect("generator indices are positive"),
            Self::Anti(a, b) => a.expand().anticommutator(&b.expand()),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Gen(_) => 1,
            Self::Anti(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn to_expr(&self) -> BracketExpr {
        match self {
            Self::Gen(i) => BracketExpr::Gen(*i),
            Self::Anti(a, b) => BracketExpr::anti(a.to_expr(), b.to_expr()),
        }
    }

    pub fn render(&self, names: &Alphabet) -> String {
        match self {
            Self::Gen(i) => names.name(*i),
            Self::Anti(a, b) => format!("{{{},{}}}", a.render(names), b.render(names)),
        }
    }
}

/// A formal rational combination of Jordan trees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JordanExpr {
    terms: BTreeMap<JordanTree, Rational>,
}

impl JordanExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(i: u32) -> Self {
        Self::tree(JordanTree::Gen(i))
    }

    pub fn tree(t: JordanTree) -> Self {
        let mut e = Self::zero();
        e.add_term(t, int(1));
        e
    }

    pub fn add_term(&mut self, t: JordanTree, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JordanTree, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (t, a) in &self.terms {
            out.add_term(t.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, a) in &other.terms {
            out.add_term(t.clone(), a.clone());
        }
        out
    }

    /// The bilinear anticommutator product of two combinations.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(JordanTree::anti(s.clone(), t.clone()), a * b);
            }
        }
        out
    }

    /// Left-normed product `((w1 w2) w3) ... wn`.
    pub fn left_normed(word: &[u32]) -> Option<Self> {
        word.iter().map(|&i| Self::gen(i)).reduce(|a, b| a.product(&b))
    }

    pub fn expand(&self) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (t, c) in &self.terms {
            p += t.expand().scale(c);
        }
        p
    }

    pub fn to_expr(&self) -> BracketExpr {
        BracketExpr::sum(self.terms.iter().map(|(t, c)| BracketExpr::scale(c.clone(), t.to_expr())))
    }

    pub fn render(&self, names: &Alphabet) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        format_sum(terms.into_iter().map(|(t, c)| (c.clone(), t.render(names))))
    }
}

impl fmt::Display for JordanExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

/// `f(a;b,c) = −¼((ab)c − 3(bc)a + (ac)b)`, products read as anticommutators.
pub fn f_comb(a: &JordanExpr, b: &JordanExpr, c: &JordanExpr) -> JordanExpr {
    let ab_c = a.product(b).product(c);
    let bc_a = b.product(c).product(a);
    let ac_b = a.product(c).product(b);
    ab_c.add(&bc_a.scale(&int(-3))).add(&ac_b).scale(&ratio(-1, 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(word: &[u32]) -> PermPolynomial {
        PermPolynomial::from_words([(int(1), word)]).unwrap()
    }

    #[test]
    fn f_comb_examples() {
        let (x1, x2, x3) = (JordanExpr::gen(1), JordanExpr::gen(2), JordanExpr::gen(3));
        assert_eq!(f_comb(&x1, &x2, &x3).expand(), w(&[1, 2, 3]));
        assert_eq!(f_comb(&x1, &x2, &x3).expand(), f_comb(&x1, &x3, &x2).expand());
        assert_eq!(f_comb(&x1, &x1, &x1).expand(), w(&[1, 1, 1]));
    }

    #[test]
    fn products_are_bilinear() {
        let a = JordanExpr::gen(1).add(&JordanExpr::gen(2).scale(&int(2)));
        let b = JordanExpr::gen(3);
        let lhs = a.product(&b).expand();
        let rhs = a.expand().anticommutator(&b.expand());
        assert_eq!(lhs, rhs);
        assert_eq!(a.product(&b).to_string(), "{x1,x3} + 2{x2,x3}");
    }
}
