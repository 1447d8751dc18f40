//! Expression trees over generators with associative product, commutator and
//! anticommutator nodes, and identity checking by substitution.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::perm::PermPolynomial;
use crate::rational::{format_magnitude_prefix, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BracketExpr {
    Gen(u32),
    /// Template slot, numbered from 1.
    Var(usize),
    Assoc(Box<BracketExpr>, Box<BracketExpr>),
    Comm(Box<BracketExpr>, Box<BracketExpr>),
    Anti(Box<BracketExpr>, Box<BracketExpr>),
    Scale(Rational, Box<BracketExpr>),
    /// Formal sum; the empty sum is zero.
    Sum(Vec<BracketExpr>),
}

impl BracketExpr {
    pub fn gen(i: u32) -> Self {
        Self::Gen(i)
    }

    pub fn var(slot: usize) -> Self {
        Self::Var(slot)
    }

    pub fn zero() -> Self {
        Self::Sum(Vec::new())
    }

    pub fn assoc(a: Self, b: Self) -> Self {
        Self::Assoc(Box::new(a), Box::new(b))
    }

    pub fn comm(a: Self, b: Self) -> Self {
        Self::Comm(Box::new(a), Box::new(b))
    }

    pub fn anti(a: Self, b: Self) -> Self {
        Self::Anti(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Rational, a: Self) -> Self {
        Self::Scale(c, Box::new(a))
    }

    pub fn sum<I: IntoIterator<Item = Self>>(terms: I) -> Self {
        Self::Sum(terms.into_iter().collect())
    }

    pub fn difference(a: Self, b: Self) -> Self {
        Self::Sum(vec![a, Self::scale(int(-1), b)])
    }

    /// The Jordan associator `<a,b,c> = {{a,b},c} − {a,{b,c}}`.
    pub fn associator(a: Self, b: Self, c: Self) -> Self {
        Self::difference(Self::anti(Self::anti(a.clone(), b.clone()), c.clone()), Self::anti(a, Self::anti(b, c)))
    }

    /// Left-associated product of the factors.
    pub fn product<I: IntoIterator<Item = Self>>(factors: I) -> Option<Self> {
        factors.into_iter().reduce(Self::assoc)
    }

    /// `[[...[x_{w1}, x_{w2}], ...], x_{wn}]`.
    pub fn left_normed_comm(word: &[u32]) -> Option<Self> {
        word.iter().map(|&i| Self::Gen(i)).reduce(Self::comm)
    }

    /// `{...{x_{w1}, x_{w2}}, ...}, x_{wn}}`.
    pub fn left_normed_anti(word: &[u32]) -> Option<Self> {
        word.iter().map(|&i| Self::Gen(i)).reduce(Self::anti)
    }

    pub fn slots(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.visit_slots(&mut out);
        out
    }

    fn visit_slots(&self, out: &mut BTreeSet<usize>) {
        match self {
            Self::Gen(_) => {}
            Self::Var(s) => {
                out.insert(*s);
            }
            Self::Assoc(a, b) | Self::Comm(a, b) | Self::Anti(a, b) => {
                a.visit_slots(out);
                b.visit_slots(out);
            }
            Self::Scale(_, a) => a.visit_slots(out),
            Self::Sum(ts) => ts.iter().for_each(|t| t.visit_slots(out)),
        }
    }

    /// Highest degree in which `slot` occurs in any term.
    pub fn slot_degree(&self, slot: usize) -> usize {
        match self {
            Self::Gen(_) => 0,
            Self::Var(s) => usize::from(*s == slot),
            Self::Assoc(a, b) | Self::Comm(a, b) | Self::Anti(a, b) => a.slot_degree(slot) + b.slot_degree(slot),
            Self::Scale(_, a) => a.slot_degree(slot),
            Self::Sum(ts) => ts.iter().map(|t| t.slot_degree(slot)).max().unwrap_or(0),
        }
    }

    pub fn max_generator(&self) -> u32 {
        match self {
            Self::Gen(i) => *i,
            Self::Var(_) => 0,
            Self::Assoc(a, b) | Self::Comm(a, b) | Self::Anti(a, b) => a.max_generator().max(b.max_generator()),
            Self::Scale(_, a) => a.max_generator(),
            Self::Sum(ts) => ts.iter().map(Self::max_generator).max().unwrap_or(0),
        }
    }

    /// Multiplies everything out into canonical form.
    pub fn expand(&self) -> Result<PermPolynomial> {
        self.substitute(&[])
    }

    /// Expands with slot `s` bound to `values[s - 1]`.
    pub fn substitute(&self, values: &[PermPolynomial]) -> Result<PermPolynomial> {
        Ok(match self {
            Self::Gen(i) => PermPolynomial::generator(*i)?,
            Self::Var(s) => values.get(s.wrapping_sub(1)).cloned().ok_or(Error::UnboundSlot(*s))?,
            Self::Assoc(a, b) => a.substitute(values)?.multiply(&b.substitute(values)?),
            Self::Comm(a, b) => a.substitute(values)?.commutator(&b.substitute(values)?),
            Self::Anti(a, b) => a.substitute(values)?.anticommutator(&b.substitute(values)?),
            Self::Scale(c, a) => a.substitute(values)?.scale(c),
            Self::Sum(ts) => {
                let mut p = PermPolynomial::zero();
                for t in ts {
                    p += t.substitute(values)?;
                }
                p
            }
        })
    }

    pub fn render(&self, names: &Alphabet) -> String {
        let mut out = String::new();
        self.write_sum(names, &mut out);
        out
    }

    fn write_sum(&self, names: &Alphabet, out: &mut String) {
        match self {
            Self::Sum(ts) if ts.is_empty() => out.push('0'),
            Self::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    let (neg, mag, body) = match t {
                        Self::Scale(c, b) => (c.is_negative(), Some(c), b.as_ref()),
                        other => (false, None, other),
                    };
                    match (i, neg) {
                        (0, true) => out.push('-'),
                        (0, false) => {}
                        (_, true) => out.push_str(" - "),
                        (_, false) => out.push_str(" + "),
                    }
                    match mag {
                        Some(c) => write_scaled(c, body, names, out),
                        None => body.write_product(names, out),
                    }
                }
            }
            Self::Scale(c, b) => {
                if c.is_negative() {
                    out.push('-');
                }
                write_scaled(c, b, names, out);
            }
            other => other.write_product(names, out),
        }
    }

    fn write_product(&self, names: &Alphabet, out: &mut String) {
        match self {
            Self::Gen(i) => out.push_str(&names.name(*i)),
            Self::Var(s) => out.push_str(&slot_name(*s)),
            Self::Comm(a, b) => {
                out.push('[');
                a.write_sum(names, out);
                out.push(',');
                b.write_sum(names, out);
                out.push(']');
            }
            Self::Anti(a, b) => {
                out.push('{');
                a.write_sum(names, out);
                out.push(',');
                b.write_sum(names, out);
                out.push('}');
            }
            Self::Assoc(a, b) => {
                match a.as_ref() {
                    Self::Sum(_) | Self::Scale(..) => a.write_paren(names, out),
                    _ => a.write_product(names, out),
                }
                out.push('*');
                match b.as_ref() {
                    Self::Sum(_) | Self::Scale(..) | Self::Assoc(..) => b.write_paren(names, out),
                    _ => b.write_product(names, out),
                }
            }
            Self::Scale(..) | Self::Sum(_) => self.write_paren(names, out),
        }
    }

    fn write_paren(&self, names: &Alphabet, out: &mut String) {
        out.push('(');
        self.write_sum(names, out);
        out.push(')');
    }
}

fn write_scaled(c: &Rational, body: &BracketExpr, names: &Alphabet, out: &mut String) {
    out.push_str(&format_magnitude_prefix(c));
    match body {
        BracketExpr::Sum(_) | BracketExpr::Scale(..) => body.write_paren(names, out),
        _ => body.write_product(names, out),
    }
}

/// `a, b, c, ...` for slots 1, 2, 3, ...; beyond `z` the slot is `v<n>`.
pub fn slot_name(slot: usize) -> String {
    if (1..=26).contains(&slot) {
        ((b'a' + slot as u8 - 1) as char).to_string()
    } else {
        format!("v{slot}")
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

/// The three-argument combination `f(a;b,c) = −¼({{a,b},c} − 3{{b,c},a} + {{a,c},b})`
/// with every product read as the anticommutator.
pub fn f_comb_expr(a: BracketExpr, b: BracketExpr, c: BracketExpr) -> BracketExpr {
    use BracketExpr as E;
    E::scale(
        crate::rational::ratio(-1, 4),
        E::sum([
            E::anti(E::anti(a.clone(), b.clone()), c.clone()),
            E::scale(int(-3), E::anti(E::anti(b.clone(), c.clone()), a.clone())),
            E::anti(E::anti(a, c), b),
        ]),
    )
}

/// `lhs = rhs` with variable slots `1..=arity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityTemplate {
    pub name: String,
    pub lhs: BracketExpr,
    pub rhs: BracketExpr,
    arity: usize,
}

impl IdentityTemplate {
    /// Slots used across both sides must be exactly `1..=arity`.
    pub fn new(name: impl Into<String>, lhs: BracketExpr, rhs: BracketExpr) -> Result<Self> {
        let mut slots = lhs.slots();
        slots.extend(rhs.slots());
        let arity = slots.len();
        if let Some((_, s)) = slots.iter().enumerate().find(|(i, s)| **s != i + 1) {
            return Err(Error::UnboundSlot(*s));
        }
        Ok(Self { name: name.into(), lhs, rhs, arity })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn difference(&self) -> BracketExpr {
        BracketExpr::difference(self.lhs.clone(), self.rhs.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Multilinear,
    Polarized,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityVerdict {
    pub name: String,
    pub mode: CheckMode,
    pub holds: bool,
    /// Slot name and the polynomial substituted for it.
    pub substitution: Vec<(String, String)>,
    /// `lhs − rhs` after substitution; zero iff the identity holds.
    pub residue: String,
}

/// Checks a template by substitution.
///
/// Multilinear mode puts a distinct generator in every slot, which settles
/// multilinear identities in characteristic zero. Polarized mode replaces
/// a slot of degree `d` by a sum of `d` fresh generators, so the result
/// contains the full linearization and the check is sound for templates
/// with repeated slots as well.
pub fn check_identity(t: &IdentityTemplate, mode: CheckMode) -> Result<IdentityVerdict> {
    if t.arity > 6 {
        return Err(Error::InvalidDimension(format!("template arity {} exceeds 6", t.arity)));
    }
    let diff = t.difference();
    let offset = diff.max_generator();
    let mut next = offset + 1;
    let mut values = Vec::with_capacity(t.arity);
    for slot in 1..=t.arity {
        let copies = match mode {
            CheckMode::Multilinear => 1,
            CheckMode::Polarized => t.lhs.slot_degree(slot).max(t.rhs.slot_degree(slot)).max(1),
        };
        let mut v = PermPolynomial::zero();
        for _ in 0..copies {
            v += PermPolynomial::generator(next)?;
            next += 1;
        }
        values.push(v);
    }
    let residue = diff.substitute(&values)?;
    Ok(IdentityVerdict {
        name: t.name.clone(),
        mode,
        holds: residue.is_zero(),
        substitution: values.iter().enumerate().map(|(i, v)| (slot_name(i + 1), v.to_string())).collect(),
        residue: residue.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use BracketExpr as E;

    fn g(i: u32) -> E {
        E::gen(i)
    }

    fn v(i: usize) -> E {
        E::var(i)
    }

    fn words(terms: &[(i64, &[u32])]) -> PermPolynomial {
        PermPolynomial::from_words(terms.iter().map(|(c, w)| (int(*c), *w))).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(E::comm(g(1), g(2)).expand().unwrap(), words(&[(1, &[1, 2]), (-1, &[2, 1])]));
        let e = E::anti(E::anti(g(1), g(2)), E::anti(g(3), g(4)));
        let expected = words(&[(2, &[1, 2, 3, 4]), (2, &[2, 1, 3, 4]), (2, &[3, 1, 2, 4]), (2, &[4, 1, 2, 3])]);
        assert_eq!(e.expand().unwrap(), expected);
        assert!(E::comm(E::comm(g(1), g(2)), E::comm(g(3), g(4))).expand().unwrap().is_zero());
        assert_eq!(v(1).expand(), Err(Error::UnboundSlot(1)));
    }

    #[test]
    fn comm_and_anti_shapes() {
        let (a, b) = (E::sum([g(1), E::comm(g(2), g(3))]), g(3));
        let pa = E::assoc(a.clone(), b.clone()).expand().unwrap();
        let pb = E::assoc(b.clone(), a.clone()).expand().unwrap();
        assert_eq!(E::comm(a.clone(), b.clone()).expand().unwrap(), &pa - &pb);
        assert_eq!(E::anti(a, b).expand().unwrap(), &pa + &pb);
    }

    #[test]
    fn metabelian_holds() {
        let t = IdentityTemplate::new("metabelian", E::comm(E::comm(v(1), v(2)), E::comm(v(3), v(4))), E::zero())
            .unwrap();
        assert!(check_identity(&t, CheckMode::Multilinear).unwrap().holds);
        assert!(check_identity(&t, CheckMode::Polarized).unwrap().holds);
    }

    #[test]
    fn commutativity_fails_with_witness() {
        let t = IdentityTemplate::new("comm", E::assoc(v(1), v(2)), E::assoc(v(2), v(1))).unwrap();
        let r = check_identity(&t, CheckMode::Multilinear).unwrap();
        assert!(!r.holds);
        assert_eq!(r.substitution, vec![("a".into(), "x1".into()), ("b".into(), "x2".into())]);
        assert_eq!(r.residue, "x1x2 - x2x1");
    }

    #[test]
    fn associator_identity_holds() {
        let (a, b, c, d) = (v(1), v(2), v(3), v(4));
        let lhs = E::scale(int(2), E::associator(E::anti(a.clone(), b.clone()), c.clone(), d.clone()));
        let rhs = E::sum([
            E::associator(E::anti(a.clone(), b.clone()), d.clone(), c.clone()),
            E::associator(E::anti(a.clone(), c.clone()), b.clone(), d.clone()),
            E::associator(E::anti(b, c), a, d),
        ]);
        let t = IdentityTemplate::new("(5)", lhs, rhs).unwrap();
        assert!(check_identity(&t, CheckMode::Multilinear).unwrap().holds);
    }

    #[test]
    fn polarization_catches_square_identities() {
        // a*a*b = a*b*a holds in P(X) only through right-commutativity.
        let t = IdentityTemplate::new("sq", E::product([v(1), v(1), v(2)]).unwrap(), E::product([v(1), v(2), v(1)]).unwrap())
            .unwrap();
        assert!(check_identity(&t, CheckMode::Polarized).unwrap().holds);
        // a*a = 0 fails, and polarization substitutes a sum.
        let t = IdentityTemplate::new("nil", E::assoc(v(1), v(1)), E::zero()).unwrap();
        let r = check_identity(&t, CheckMode::Polarized).unwrap();
        assert!(!r.holds);
        assert_eq!(r.substitution[0].1, "x1 + x2");
    }

    #[test]
    fn template_slots_must_be_contiguous() {
        assert!(IdentityTemplate::new("gap", v(1), v(3)).is_err());
    }

    #[test]
    fn render_forms() {
        let e = E::sum([
            E::comm(g(2), g(1)),
            E::scale(crate::rational::ratio(-1, 2), E::anti(g(1), g(1))),
            E::scale(int(3), E::product([g(1), g(2), g(3)]).unwrap()),
        ]);
        assert_eq!(e.to_string(), "[x2,x1] - 1/2 {x1,x1} + 3x1*x2*x3");
        assert_eq!(E::assoc(g(1), E::assoc(g(2), g(3))).to_string(), "x1*(x2*x3)");
    }
}
