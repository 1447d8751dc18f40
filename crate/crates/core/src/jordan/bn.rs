use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::jordan::{f_comb, JordanExpr};
use crate::perm::{basis_sequences, PermPolynomial};
use crate::rational::{format_sum, int, ratio, Rational};

/// `f(x_first; x_{a1}, x_{a2} ⋯ x_{am})` with `a1 <= ... <= am` and the last
/// argument read as a left-normed product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FElement {
    first: u32,
    args: Vec<u32>,
}

impl FElement {
    pub fn new(first: u32, mut args: Vec<u32>) -> Result<Self> {
        if args.len() < 2 {
            return Err(Error::WordTooShort(args.len() + 1));
        }
        if first == 0 || args.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        args.sort_unstable();
        Ok(Self { first, args })
    }

    pub fn first(&self) -> u32 {
        self.first
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn degree(&self) -> usize {
        1 + self.args.len()
    }

    pub fn to_jordan(&self) -> JordanExpr {
        let rest = JordanExpr::left_normed(&self.args[1..]).expect("at least one trailing argument");
        f_comb(&JordanExpr::gen(self.first), &JordanExpr::gen(self.args[0]), &rest)
    }

    pub fn expand(&self) -> PermPolynomial {
        self.to_jordan().expand()
    }

    pub fn render(&self, names: &Alphabet) -> String {
        let rest: String = self.args[1..].iter().map(|&i| names.name(i)).collect();
        format!("f({};{},{})", names.name(self.first), names.name(self.args[0]), rest)
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

/// `B_n(X)` for `n >= 3`, in the same index order as the perm monomials.
pub fn bn_basis(k: usize, n: usize) -> Result<Vec<FElement>> {
    if n < 3 {
        return Err(Error::WordTooShort(n));
    }
    if k == 0 {
        return Err(Error::InvalidDimension("need at least one generator".into()));
    }
    let tails = basis_sequences(n - 1, 1, k as u32);
    Ok((1..=k as u32)
        .flat_map(|first| tails.iter().map(move |args| FElement { first, args: args.clone() }))
        .collect())
}

/// `B_1 = X` and `B_2 = {x_i x_j : i <= j}` as Jordan combinations.
pub fn low_degree_basis(k: usize, n: usize) -> Result<Vec<JordanExpr>> {
    match n {
        1 => Ok((1..=k as u32).map(JordanExpr::gen).collect()),
        2 => Ok(basis_sequences(2, 1, k as u32)
            .into_iter()
            .map(|w| JordanExpr::left_normed(&w).expect("two letters"))
            .collect()),
        _ => Err(Error::InvalidDimension(format!("degree {n} is handled by bn_basis"))),
    }
}

/// A rational combination of B_n elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BnCombination {
    pub terms: BTreeMap<FElement, Rational>,
}

impl BnCombination {
    fn add(&mut self, f: FElement, c: Rational) {
        use num_traits::Zero;
        let slot = self.terms.entry(f.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&f);
        }
    }

    pub fn expand(&self) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (f, c) in &self.terms {
            p += f.expand().scale(c);
        }
        p
    }

    pub fn render(&self, names: &Alphabet) -> String {
        format_sum(self.terms.iter().map(|(f, c)| (c.clone(), f.render(names))))
    }
}

impl fmt::Display for BnCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

/// Rewrites the left-normed J(X) word `((w1 w2) w3) ⋯ wn` over B_n.
///
/// The base case is `(ab)c = f(a;b,c) + f(b;a,c) + 2f(c;a,b)`; each further
/// letter applies `f(a;b,c)d = ½f(a;b,cd) + ½f(d;a,bc)`, and the arguments of
/// each `f` are then sorted, which reassociation and the symmetry in the
/// last two slots permit.
pub fn to_bn(word: &[u32]) -> Result<BnCombination> {
    if word.len() < 3 {
        return Err(Error::WordTooShort(word.len()));
    }
    let (a, b, c) = (word[0], word[1], word[2]);
    let mut acc = BnCombination::default();
    acc.add(FElement::new(a, vec![b, c])?, int(1));
    acc.add(FElement::new(b, vec![a, c])?, int(1));
    acc.add(FElement::new(c, vec![a, b])?, int(2));
    let half = ratio(1, 2);
    for &x in &word[3..] {
        let mut next = BnCombination::default();
        for (f, coeff) in &acc.terms {
            let c = coeff * &half;
            let mut grown = f.args.clone();
            grown.push(x);
            next.add(FElement::new(f.first, grown)?, c.clone());
            let mut moved = f.args.clone();
            moved.push(f.first);
            next.add(FElement::new(x, moved)?, c);
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::dimension;

    #[test]
    fn bn_examples() {
        let b = bn_basis(3, 3).unwrap();
        let ml: Vec<_> = b.iter().filter(|f| {
            let mut all = f.args().to_vec();
            all.push(f.first());
            all.sort();
            all == [1, 2, 3]
        }).map(|f| f.to_string()).collect();
        assert_eq!(ml, vec!["f(x1;x2,x3)", "f(x2;x1,x3)", "f(x3;x1,x2)"]);
        assert_eq!(bn_basis(2, 3).unwrap().len() as u128, dimension(2, 3));
        let one = bn_basis(1, 4).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "f(x1;x1,x1x1)");
        assert!(bn_basis(2, 2).is_err());
        assert_eq!(low_degree_basis(2, 2).unwrap().len(), 3);
    }

    #[test]
    fn to_bn_base_case() {
        let c = to_bn(&[1, 2, 3]).unwrap();
        assert_eq!(c.to_string(), "f(x1;x2,x3) + f(x2;x1,x3) + 2f(x3;x1,x2)");
        let word = JordanExpr::left_normed(&[1, 2, 3]).unwrap().expand();
        assert_eq!(c.expand(), word);
        assert!(to_bn(&[1, 2]).is_err());
    }

    #[test]
    fn to_bn_degree_four() {
        let c = to_bn(&[1, 2, 3, 4]).unwrap();
        assert_eq!(c.expand(), JordanExpr::left_normed(&[1, 2, 3, 4]).unwrap().expand());
    }
}
