use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::envelope::algebra::{BasisSplit, MetabelianLieAlgebra, SplitSummary};
use crate::envelope::dense::{apply_columns, invert_columns, Vector};
use crate::error::{Error, Result};
use crate::parse::{lex, Names, Parser, Tok};
use crate::rational::{format_sum, int, Rational};

/// A commutative monomial with exactly one dotted letter, `ẋ_d z_{i1}⋯z_{in}`.
/// Letters index the split basis (`Y` first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EnvelopeMonomial {
    pub dot: usize,
    pub tail: Vec<usize>,
}

impl EnvelopeMonomial {
    pub fn new(dot: usize, mut tail: Vec<usize>) -> Self {
        tail.sort_unstable();
        Self { dot, tail }
    }

    pub fn letter(dot: usize) -> Self {
        Self { dot, tail: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        1 + self.tail.len()
    }

    fn without(&self, pos: usize) -> Vec<usize> {
        let mut t = self.tail.clone();
        t.remove(pos);
        t
    }
}

/// Degree, then the dotted letter, then the tail.
impl Ord for EnvelopeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.dot, &self.tail).cmp(&(other.degree(), other.dot, &other.tail))
    }
}

impl PartialOrd for EnvelopeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A rational combination of [`EnvelopeMonomial`]s.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnvelopePolynomial {
    terms: BTreeMap<EnvelopeMonomial, Rational>,
}

impl EnvelopePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: EnvelopeMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, Rational::one());
        p
    }

    pub fn add_term(&mut self, m: EnvelopeMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EnvelopeMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&int(-1), other);
        out
    }
}

/// Which tail letter a reducible monomial is rewritten against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The smallest applicable tail letter.
    Leftmost,
    /// The largest applicable tail letter.
    Rightmost,
}

/// `ẋ_dot x_letter → reduct`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub redex: EnvelopeMonomial,
    pub reduct: EnvelopePolynomial,
}

/// An ambiguity reduced in two ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub ambiguity: String,
    pub first: String,
    pub second: String,
    pub difference: String,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub compositions: Vec<Composition>,
    pub all_trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedPair {
    pub pair: [String; 2],
    pub normal_form: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    pub letters_normal: bool,
    pub pairs: Vec<EmbedPair>,
    pub passes: bool,
}

/// The universal enveloping perm algebra of a metabelian Lie algebra,
/// presented by rewriting rules on monomials linear in the dotted letters.
#[derive(Debug, Clone)]
pub struct Envelope {
    algebra: MetabelianLieAlgebra,
    split: BasisSplit,
    /// The algebra in the split basis.
    local: MetabelianLieAlgebra,
    /// Original basis vectors in split coordinates.
    to_local: Vec<Vector>,
    ny: usize,
}

impl Envelope {
    pub fn new(algebra: MetabelianLieAlgebra) -> Result<Self> {
        let v = algebra.validate();
        if let Some(t) = v.jacobi_violations.first() {
            return Err(Error::InvalidAlgebra(format!("Jacobi identity fails on {t:?}")));
        }
        if let Some(t) = v.metabelian_violations.first() {
            return Err(Error::InvalidAlgebra(format!("metabelian identity fails on {t:?}")));
        }
        let split = algebra.split_basis();
        let local = algebra.change_basis(&split.columns, split.labels.clone())?;
        let to_local = invert_columns(&split.columns).expect("split basis is a basis");
        let ny = split.y.len();
        Ok(Self { algebra, split, local, to_local, ny })
    }

    pub fn algebra(&self) -> &MetabelianLieAlgebra {
        &self.algebra
    }

    pub fn split(&self) -> &BasisSplit {
        &self.split
    }

    pub fn split_summary(&self) -> SplitSummary {
        self.split.summary(&self.algebra)
    }

    /// Labels of the split basis, `Y` first.
    pub fn labels(&self) -> &[String] {
        &self.split.labels
    }

    pub fn dim(&self) -> usize {
        self.local.dim()
    }

    /// Number of `Y` letters; indices below this are in `[L, L]`.
    pub fn y_count(&self) -> usize {
        self.ny
    }

    pub fn is_y(&self, letter: usize) -> bool {
        letter < self.ny
    }

    /// `Σ c_a ẋ_a · tail` for a coordinate vector `c` in the split basis.
    fn dotted(&self, v: &[Rational], tail: &[usize]) -> EnvelopePolynomial {
        let mut p = EnvelopePolynomial::zero();
        for (a, c) in v.iter().enumerate() {
            p.add_term(EnvelopeMonomial::new(a, tail.to_vec()), c.clone());
        }
        p
    }

    /// `ẏ_j z_i → [y_j, z_i]˙` and `ż_i z_j → ż_j z_i + [z_i, z_j]˙` for `i > j`.
    pub fn relations(&self) -> Vec<RewriteRule> {
        let n = self.dim();
        let mut rules = Vec::new();
        for y in 0..self.ny {
            for z in self.ny..n {
                rules.push(RewriteRule {
                    redex: EnvelopeMonomial::new(y, vec![z]),
                    reduct: self.dotted(&self.local.bracket(y, z), &[]),
                });
            }
        }
        for i in self.ny..n {
            for j in self.ny..i {
                let mut reduct = EnvelopePolynomial::monomial(EnvelopeMonomial::new(j, vec![i]));
                reduct.add_scaled(&Rational::one(), &self.dotted(&self.local.bracket(i, j), &[]));
                rules.push(RewriteRule { redex: EnvelopeMonomial::new(i, vec![j]), reduct });
            }
        }
        rules
    }

    /// Positions in the tail that form a redex with the dotted letter.
    fn redexes(&self, m: &EnvelopeMonomial) -> Vec<usize> {
        if self.is_y(m.dot) {
            (0..m.tail.len()).collect()
        } else {
            (0..m.tail.len()).filter(|&p| m.tail[p] < m.dot).collect()
        }
    }

    pub fn is_normal(&self, m: &EnvelopeMonomial) -> bool {
        !m.tail.iter().any(|&t| self.is_y(t)) && self.redexes(m).is_empty()
    }

    /// One rewrite of `m` against the tail letter at `pos`.
    fn rewrite_at(&self, m: &EnvelopeMonomial, pos: usize) -> EnvelopePolynomial {
        let z = m.tail[pos];
        let rest = m.without(pos);
        let mut out = self.dotted(&self.local.bracket(m.dot, z), &rest);
        if !self.is_y(m.dot) {
            let mut t = rest;
            t.push(m.dot);
            out.add_term(EnvelopeMonomial::new(z, t), Rational::one());
        }
        out
    }

    fn step(&self, m: &EnvelopeMonomial, strategy: Strategy) -> Option<EnvelopePolynomial> {
        if m.tail.iter().any(|&t| self.is_y(t)) {
            return Some(EnvelopePolynomial::zero());
        }
        let r = self.redexes(m);
        let pos = match strategy {
            Strategy::Leftmost => r.first(),
            Strategy::Rightmost => r.last(),
        }?;
        Some(self.rewrite_at(m, *pos))
    }

    /// Reduces to a combination of basis monomials `ẏ` and
    /// `ż_{i1} z_{i2}⋯z_{in}` with `i1 ≤ i2 ≤ … ≤ in`, taking the largest
    /// reducible monomial first. Undotted `Y` letters vanish.
    pub fn normal_form(&self, p: &EnvelopePolynomial, strategy: Strategy) -> EnvelopePolynomial {
        let mut work = p.terms.clone();
        let mut done = EnvelopePolynomial::zero();
        while let Some((m, c)) = work.pop_last() {
            match self.step(&m, strategy) {
                None => done.add_term(m, c),
                Some(r) => {
                    for (k, v) in r.terms {
                        let e = work.entry(k.clone()).or_insert_with(Rational::zero);
                        *e += &c * v;
                        if e.is_zero() {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        done
    }

    /// Both overlap families: `ẏ z_i z_j` and `ż_i z_j z_k` with `i > j > k`.
    pub fn check_compositions(&self) -> CompositionReport {
        let n = self.dim();
        let mut overlaps = Vec::new();
        for y in 0..self.ny {
            for i in self.ny..n {
                for j in self.ny..i {
                    overlaps.push((EnvelopeMonomial::new(y, vec![j, i]), i, j));
                }
            }
        }
        for i in self.ny..n {
            for j in self.ny..i {
                for k in self.ny..j {
                    overlaps.push((EnvelopeMonomial::new(i, vec![k, j]), j, k));
                }
            }
        }
        let compositions: Vec<Composition> = overlaps
            .into_iter()
            .map(|(m, a, b)| {
                let at = |letter: usize| m.tail.iter().position(|&t| t == letter).expect("letter in tail");
                let first = self.normal_form(&self.rewrite_at(&m, at(a)), Strategy::Leftmost);
                let second = self.normal_form(&self.rewrite_at(&m, at(b)), Strategy::Leftmost);
                let diff = first.sub(&second);
                Composition {
                    ambiguity: self.render_monomial(&m, false),
                    first: self.render(&first, false),
                    second: self.render(&second, false),
                    difference: self.render(&diff, false),
                    trivial: diff.is_zero(),
                }
            })
            .collect();
        let all_trivial = compositions.iter().all(|c| c.trivial);
        CompositionReport { compositions, all_trivial }
    }

    /// Letters stay normal, and `ẋ_i x_j − ẋ_j x_i` reduces to `[x_i, x_j]˙`
    /// for every pair of original basis vectors.
    pub fn embed_check(&self) -> EmbedReport {
        let n = self.dim();
        let letters_normal = (0..n).all(|a| self.is_normal(&EnvelopeMonomial::letter(a)));
        let labels = self.algebra.labels();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (xi, xj) = (&self.to_local[i], &self.to_local[j]);
                let mut p = self.product(xi, xj);
                p.add_scaled(&int(-1), &self.product(xj, xi));
                let nf = self.normal_form(&p, Strategy::Leftmost);
                let target = apply_columns(&self.to_local, &self.algebra.bracket(i, j));
                let expected = self.dotted(&target, &[]);
                pairs.push(EmbedPair {
                    pair: [labels[i].clone(), labels[j].clone()],
                    normal_form: self.render(&nf, false),
                    expected: self.render(&expected, false),
                    ok: nf == expected,
                });
            }
        }
        let passes = letters_normal && pairs.iter().all(|p| p.ok);
        EmbedReport { letters_normal, pairs, passes }
    }

    /// `u̇ v` for coordinate vectors in the split basis.
    fn product(&self, u: &[Rational], v: &[Rational]) -> EnvelopePolynomial {
        let mut p = EnvelopePolynomial::zero();
        for (a, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, d) in v.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                p.add_term(EnvelopeMonomial::new(a, vec![b]), c * d);
            }
        }
        p
    }

    /// `d(e1)*e2*e2`, or `ė1e2e2` with `unicode`.
    pub fn render_monomial(&self, m: &EnvelopeMonomial, unicode: bool) -> String {
        let labels = self.labels();
        let mut out = if unicode { dotted_label(&labels[m.dot]) } else { format!("d({})", labels[m.dot]) };
        for &t in &m.tail {
            if !unicode {
                out.push('*');
            }
            out.push_str(&labels[t]);
        }
        out
    }

    /// Highest monomials first.
    pub fn render(&self, p: &EnvelopePolynomial, unicode: bool) -> String {
        format_sum(p.terms.iter().rev().map(|(m, c)| (c.clone(), self.render_monomial(m, unicode))))
    }

    pub fn rule_text(&self, r: &RewriteRule, unicode: bool) -> String {
        format!("{} -> {}", self.render_monomial(&r.redex, unicode), self.render(&r.reduct, unicode))
    }

    /// Parses a combination of commutative words over the original basis
    /// labels, each with exactly one dotted letter `d(name)`.
    ///
    /// ```text
    /// expr   := ['-'|'+'] term (('+'|'-') term)*
    /// term   := factor (['*'] factor)*
    /// factor := rational | name | 'd' '(' name ')' | '(' expr ')'
    /// ```
    pub fn parse(&self, text: &str) -> Result<EnvelopePolynomial> {
        let names = Alphabet::from_names(self.algebra.labels().to_vec())?;
        let toks = lex(text, Names::Fixed(&names), true)?;
        let mut parser = Parser::new(toks, text.len());
        let raw = RawParser { env: self, p: &mut parser }.expr()?;
        if !parser.at_end() {
            return parser.error("unexpected trailing input");
        }
        let mut out = EnvelopePolynomial::zero();
        for ((dots, plain), c) in raw.0 {
            if dots.len() != 1 {
                return Err(Error::DotCount(dots.len()));
            }
            out.add_term(EnvelopeMonomial::new(dots[0], plain), c);
        }
        Ok(out)
    }
}

fn dotted_label(label: &str) -> String {
    let mut chars = label.chars();
    let mut out = String::new();
    if let Some(c) = chars.next() {
        out.push(c);
        out.push('\u{307}');
    }
    out.extend(chars);
    out
}

impl fmt::Display for EnvelopeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d(x{})", self.dot + 1)?;
        for t in &self.tail {
            write!(f, "*x{}", t + 1)?;
        }
        Ok(())
    }
}

/// Commutative polynomials with any number of dots, keyed by
/// (sorted dotted letters, sorted plain letters).
#[derive(Default)]
struct Raw(BTreeMap<(Vec<usize>, Vec<usize>), Rational>);

impl Raw {
    fn scalar(c: Rational) -> Self {
        let mut r = Raw::default();
        if !c.is_zero() {
            r.0.insert((Vec::new(), Vec::new()), c);
        }
        r
    }

    fn letter(v: &[Rational], dotted: bool) -> Self {
        let mut r = Raw::default();
        for (a, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let key = if dotted { (vec![a], Vec::new()) } else { (Vec::new(), vec![a]) };
            r.0.insert(key, c.clone());
        }
        r
    }

    fn add(&mut self, other: Raw, sign: &Rational) {
        for (k, c) in other.0 {
            let e = self.0.entry(k.clone()).or_insert_with(Rational::zero);
            *e += sign * c;
            if e.is_zero() {
                self.0.remove(&k);
            }
        }
    }

    fn mul(&self, other: &Raw) -> Raw {
        let mut out = Raw::default();
        for ((d1, p1), c1) in &self.0 {
            for ((d2, p2), c2) in &other.0 {
                let mut d: Vec<usize> = d1.iter().chain(d2).copied().collect();
                let mut p: Vec<usize> = p1.iter().chain(p2).copied().collect();
                d.sort_unstable();
                p.sort_unstable();
                out.add(Raw(BTreeMap::from([((d, p), c1 * c2)])), &Rational::one());
            }
        }
        out
    }
}

struct RawParser<'a, 'b> {
    env: &'a Envelope,
    p: &'b mut Parser,
}

impl RawParser<'_, '_> {
    fn expr(&mut self) -> Result<Raw> {
        let mut out = Raw::default();
        let mut sign = match self.p.peek() {
            Some(Tok::Minus) => {
                self.p.bump();
                int(-1)
            }
            Some(Tok::Plus) => {
                self.p.bump();
                int(1)
            }
            _ => int(1),
        };
        loop {
            let t = self.term()?;
            out.add(t, &sign);
            sign = match self.p.peek() {
                Some(Tok::Plus) => int(1),
                Some(Tok::Minus) => int(-1),
                _ => break,
            };
            self.p.bump();
        }
        Ok(out)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.p.peek(), Some(Tok::Num(_) | Tok::Name(_) | Tok::Dot | Tok::LParen))
    }

    fn term(&mut self) -> Result<Raw> {
        if !self.starts_factor() {
            return self.p.error("expected a term");
        }
        let mut acc = Raw::scalar(Rational::one());
        loop {
            let f = self.factor()?;
            acc = acc.mul(&f);
            if self.p.peek() == Some(&Tok::Star) {
                self.p.bump();
                if !self.starts_factor() {
                    return self.p.error("expected a factor after '*'");
                }
            } else if !self.starts_factor() {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Raw> {
        let local = |i: u32| &self.env.to_local[i as usize - 1];
        match self.p.bump() {
            Some(Tok::Num(q)) => Ok(Raw::scalar(q)),
            Some(Tok::Name(i)) => Ok(Raw::letter(local(i), false)),
            Some(Tok::Dot) => {
                self.p.expect(Tok::LParen, "'('")?;
                let Some(Tok::Name(i)) = self.p.bump() else {
                    return self.p.error("expected a basis name inside d(...)");
                };
                let r = Raw::letter(&self.env.to_local[i as usize - 1], true);
                self.p.expect(Tok::RParen, "')'")?;
                Ok(r)
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.p.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => self.p.error("expected a factor"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis() -> Envelope {
        Envelope::new(MetabelianLieAlgebra::heisenberg()).unwrap()
    }

    fn two_dim() -> Envelope {
        Envelope::new(
            MetabelianLieAlgebra::from_json(r#"{"dim":2,"brackets":[{"i":1,"j":2,"value":[[2,"1"]]}]}"#).unwrap(),
        )
        .unwrap()
    }

    fn nf(env: &Envelope, text: &str) -> String {
        let p = env.parse(text).unwrap();
        let a = env.normal_form(&p, Strategy::Leftmost);
        assert_eq!(a, env.normal_form(&p, Strategy::Rightmost));
        env.render(&a, false)
    }

    #[test]
    fn heisenberg_rules() {
        let h = heis();
        let rules: Vec<String> = h.relations().iter().map(|r| h.rule_text(r, false)).collect();
        assert_eq!(rules, ["d(e3)*e1 -> 0", "d(e3)*e2 -> 0", "d(e2)*e1 -> d(e1)*e2 - d(e3)"]);
    }

    #[test]
    fn abelian_rules() {
        let a = Envelope::new(MetabelianLieAlgebra::abelian(2).unwrap()).unwrap();
        let rules: Vec<String> = a.relations().iter().map(|r| a.rule_text(r, false)).collect();
        assert_eq!(rules, ["d(e2)*e1 -> d(e1)*e2"]);
    }

    #[test]
    fn two_dim_rule_sign() {
        let t = two_dim();
        let rules: Vec<String> = t.relations().iter().map(|r| t.rule_text(r, false)).collect();
        assert_eq!(rules, ["d(e2)*e1 -> -d(e2)"]);
    }

    #[test]
    fn normal_forms() {
        let h = heis();
        assert_eq!(nf(&h, "d(e2)*e1"), "d(e1)*e2 - d(e3)");
        assert_eq!(nf(&h, "d(e2)*e1*e1"), "d(e1)*e1*e2");
        assert_eq!(nf(&h, "e1 d(e2) e1"), "d(e1)*e1*e2");
        assert_eq!(nf(&h, "d(e1)*e2 + 1/2 d(e3)"), "d(e1)*e2 + 1/2 d(e3)");
        assert_eq!(nf(&h, "d(e1)*e3"), "0");
        assert_eq!(nf(&h, "(d(e1) + d(e2))*e1 - d(e1)e1"), "d(e1)*e2 - d(e3)");
    }

    #[test]
    fn unicode_rendering() {
        let h = heis();
        let p = h.normal_form(&h.parse("d(e2)*e1").unwrap(), Strategy::Leftmost);
        assert_eq!(h.render(&p, true), "e\u{307}1e2 - e\u{307}3");
    }

    #[test]
    fn dot_count_errors() {
        let h = heis();
        assert_eq!(h.parse("e1*e2"), Err(Error::DotCount(0)));
        assert_eq!(h.parse("d(e1)*d(e2)"), Err(Error::DotCount(2)));
        assert!(matches!(h.parse("d(e4)"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(h.parse("d(e1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn compositions_and_embedding() {
        for env in [heis(), two_dim(), Envelope::new(MetabelianLieAlgebra::abelian(3).unwrap()).unwrap()] {
            assert!(env.check_compositions().all_trivial);
            assert!(env.embed_check().passes);
        }
        let e = two_dim().embed_check();
        assert_eq!(e.pairs[0].normal_form, "d(e2)");
        assert_eq!(heis().embed_check().pairs[0].normal_form, "d(e3)");
    }

    #[test]
    fn heisenberg_composition_count() {
        // ẏ z_i z_j has one instance, ż_i z_j z_k none for two Z letters.
        assert_eq!(heis().check_compositions().compositions.len(), 1);
    }

    #[test]
    fn rejects_non_metabelian() {
        let sl2 = MetabelianLieAlgebra::from_json(
            r#"{"dim":3,"brackets":[{"i":1,"j":2,"value":[[3,"1"]]},{"i":1,"j":3,"value":[[1,"-2"]]},{"i":2,"j":3,"value":[[2,"2"]]}]}"#,
        )
        .unwrap();
        assert!(matches!(Envelope::new(sl2), Err(Error::InvalidAlgebra(_))));
    }
}
