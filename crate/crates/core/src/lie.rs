//! Lie elements of P(X): the head map, the Dynkin map and the decision
//! procedure `f` is Lie iff `D(head(f)) = f`, plus the free metabelian basis
//! and an independent brute-force oracle for the Lie subalgebra.

use std::fmt;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::bracket::BracketExpr;
use crate::error::{Error, Result};
use crate::perm::{basis_sequences, Multidegree, PermMonomial, PermPolynomial, Subspace};
use crate::rational::{format_sum, Rational};

/// Keeps the monomials whose head exceeds the first tail letter; degree-one
/// monomials are kept as they are.
pub fn head(f: &PermPolynomial) -> PermPolynomial {
    let mut out = PermPolynomial::zero();
    for (m, c) in f.terms() {
        let keep = match m.tail().first() {
            None => true,
            Some(&second) => m.head() > second,
        };
        if keep {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Expansion of the left-normed commutator of a word.
pub fn left_normed_commutator(word: &[u32]) -> Result<PermPolynomial> {
    let (&first, rest) = word.split_first().ok_or(Error::EmptyMonomial)?;
    let mut p = PermPolynomial::generator(first)?;
    for &x in rest {
        p = p.commutator(&PermPolynomial::generator(x)?);
    }
    Ok(p)
}

/// `x_{i1} x_{i2} ... x_{in} ↦ [[...[x_{i1}, x_{i2}], ...], x_{in}]`, extended
/// linearly. No scalar normalization is applied.
pub fn dynkin(f: &PermPolynomial) -> PermPolynomial {
    f.map_linear(|m| left_normed_commutator(&m.letters()).expect("monomials are nonempty"))
}

/// Decides whether `f` lies in the Lie subalgebra generated by X, one
/// multi-homogeneous component at a time.
pub fn is_lie(f: &PermPolynomial) -> bool {
    f.components().values().all(|c| dynkin(&head(c)) == *c)
}

/// A rational combination of left-normed commutator words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieCombination {
    pub terms: Vec<(Rational, Vec<u32>)>,
}

impl LieCombination {
    pub fn expand(&self) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (c, w) in &self.terms {
            p += left_normed_commutator(w).expect("nonempty words").scale(c);
        }
        p
    }

    pub fn to_expr(&self) -> BracketExpr {
        BracketExpr::sum(self.terms.iter().map(|(c, w)| {
            BracketExpr::scale(c.clone(), BracketExpr::left_normed_comm(w).expect("nonempty words"))
        }))
    }

    pub fn render(&self, names: &Alphabet) -> String {
        format_sum(self.terms.iter().map(|(c, w)| (c.clone(), render_left_normed(w, names))))
    }
}

impl fmt::Display for LieCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

fn render_left_normed(word: &[u32], names: &Alphabet) -> String {
    let mut s = names.name(word[0]);
    for &x in &word[1..] {
        s = format!("[{s},{}]", names.name(x));
    }
    s
}

/// Writes a Lie element as left-normed commutators read off `head(f)`.
pub fn lie_express(f: &PermPolynomial) -> Result<LieCombination> {
    let h = head(f);
    let image = dynkin(&h);
    if image != *f {
        return Err(Error::NotLie(f - &image));
    }
    let mut terms: Vec<_> = h.terms().map(|(m, c)| (c.clone(), m.letters())).collect();
    terms.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.1.cmp(&b.1)));
    Ok(LieCombination { terms })
}

/// `[[...[[x_upper, x_lower], x_r1], ...], x_rm]` with
/// `upper > lower <= r1 <= ... <= rm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MLMonomial {
    upper: u32,
    lower: u32,
    rest: Vec<u32>,
}

impl MLMonomial {
    pub fn new(upper: u32, lower: u32, mut rest: Vec<u32>) -> Result<Self> {
        rest.sort_unstable();
        if lower == 0 || upper <= lower || rest.first().is_some_and(|&r| r < lower) {
            return Err(Error::InvalidDimension(format!(
                "not a metabelian basis word: upper={upper}, lower={lower}, rest={rest:?}"
            )));
        }
        Ok(Self { upper, lower, rest })
    }

    pub fn word(&self) -> Vec<u32> {
        let mut w = vec![self.upper, self.lower];
        w.extend_from_slice(&self.rest);
        w
    }

    pub fn degree(&self) -> usize {
        2 + self.rest.len()
    }

    pub fn expand(&self) -> PermPolynomial {
        left_normed_commutator(&self.word()).expect("degree >= 2")
    }

    pub fn render(&self, names: &Alphabet) -> String {
        render_left_normed(&self.word(), names)
    }

    fn leading(&self) -> PermMonomial {
        let mut tail = vec![self.lower];
        tail.extend_from_slice(&self.rest);
        PermMonomial::from_sorted(self.upper, tail)
    }
}

impl fmt::Display for MLMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

/// Basis of the degree-`n` component of the free metabelian Lie algebra on
/// `k` generators, optionally restricted to one multidegree.
pub fn ml_basis(k: usize, n: usize, multidegree: Option<&Multidegree>) -> Result<Vec<MLMonomial>> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("metabelian basis words need degree >= 2, got {n}")));
    }
    if k == 0 {
        return Err(Error::InvalidDimension("need at least one generator".into()));
    }
    if let Some(md) = multidegree {
        if md.total() != n {
            return Err(Error::MultidegreeMismatch { total: md.total(), degree: n });
        }
    }
    let k = k as u32;
    let mut out = Vec::new();
    for lower in 1..=k {
        for upper in lower + 1..=k {
            for rest in basis_sequences(n - 2, lower, k) {
                let m = MLMonomial { upper, lower, rest };
                if multidegree.is_none_or(|md| m.leading().multidegree() == *md) {
                    out.push(m);
                }
            }
        }
    }
    out.sort_by_key(|m| m.leading());
    Ok(out)
}

/// The degree-`n` component of the Lie subalgebra of P(X) generated by
/// `x1..xk`, built by closing `L_1 = span X` under `[L_p, L_q]`, `p + q = n`.
/// With a multidegree the result is that slice of the component.
pub fn lie_span_oracle(k: usize, n: usize, multidegree: Option<&Multidegree>) -> Result<Subspace> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidDimension(format!("need k >= 1 and n >= 1, got k={k}, n={n}")));
    }
    let mut layers: Vec<Vec<PermPolynomial>> = vec![Vec::new()];
    let mut first = Subspace::degree(k, 1)?;
    for i in 1..=k as u32 {
        first.insert(&PermPolynomial::generator(i)?)?;
    }
    layers.push(first.basis());
    for d in 2..=n {
        let mut s = Subspace::degree(k, d)?;
        for p in 1..=d / 2 {
            let q = d - p;
            for (i, a) in layers[p].iter().enumerate() {
                let start = if p == q { i + 1 } else { 0 };
                for b in &layers[q][start..] {
                    s.insert(&a.commutator(b))?;
                }
            }
        }
        layers.push(s.basis());
    }
    match multidegree {
        None => {
            let mut s = Subspace::degree(k, n)?;
            for v in &layers[n] {
                s.insert(v)?;
            }
            Ok(s)
        }
        Some(md) => {
            if md.total() != n {
                return Err(Error::MultidegreeMismatch { total: md.total(), degree: n });
            }
            let mut s = Subspace::multidegree(k, md.clone())?;
            for v in &layers[n] {
                if let Some(part) = v.components().get(md) {
                    s.insert(part)?;
                }
            }
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(terms: &[(i64, &[u32])]) -> PermPolynomial {
        PermPolynomial::from_words(terms.iter().map(|(c, w)| (int(*c), *w))).unwrap()
    }

    #[test]
    fn head_examples() {
        let f = p(&[(1, &[1, 2, 3, 4]), (1, &[2, 1, 3, 4]), (-1, &[3, 1, 2, 4]), (2, &[4, 1, 2, 3]), (1, &[2])]);
        let h = p(&[(1, &[2, 1, 3, 4]), (-1, &[3, 1, 2, 4]), (2, &[4, 1, 2, 3]), (1, &[2])]);
        assert_eq!(head(&f), h);
        assert_eq!(head(&f).to_string(), "x2x1x3x4 - x3x1x2x4 + 2x4x1x2x3 + x2");
        assert!(head(&p(&[(1, &[1, 2, 3])])).is_zero());
        assert_eq!(head(&p(&[(1, &[2, 1, 3])])), p(&[(1, &[2, 1, 3])]));
        assert!(head(&p(&[(1, &[1, 1, 2])])).is_zero());
    }

    #[test]
    fn dynkin_examples() {
        assert_eq!(dynkin(&p(&[(1, &[2, 1])])), p(&[(1, &[2, 1]), (-1, &[1, 2])]));
        assert_eq!(dynkin(&p(&[(1, &[2, 1, 3])])), p(&[(1, &[2, 1, 3]), (-1, &[1, 2, 3])]));
        assert_eq!(dynkin(&p(&[(1, &[1])])), p(&[(1, &[1])]));
    }

    #[test]
    fn is_lie_examples() {
        assert!(is_lie(&p(&[(1, &[2, 1, 3]), (-1, &[1, 2, 3])])));
        assert!(!is_lie(&p(&[(1, &[1, 2])])));
        assert!(is_lie(&p(&[(1, &[1])])));
        assert!(is_lie(&PermPolynomial::zero()));
    }

    #[test]
    fn lie_express_examples() {
        let e = lie_express(&p(&[(1, &[2, 1, 3]), (-1, &[1, 2, 3])])).unwrap();
        assert_eq!(e.to_string(), "[[x2,x1],x3]");
        let e = lie_express(&p(&[(1, &[1, 2]), (-1, &[2, 1])])).unwrap();
        assert_eq!(e.to_string(), "-[x2,x1]");
        assert_eq!(e.expand(), p(&[(1, &[1, 2]), (-1, &[2, 1])]));
        match lie_express(&p(&[(1, &[1, 2])])) {
            Err(Error::NotLie(defect)) => assert_eq!(defect, p(&[(1, &[1, 2])])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ml_basis_examples() {
        let b = ml_basis(3, 3, Some(&Multidegree::multilinear(3))).unwrap();
        let shown: Vec<_> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["[[x2,x1],x3]", "[[x3,x1],x2]"]);
        assert_eq!(ml_basis(2, 2, Some(&Multidegree::multilinear(2))).unwrap().len(), 1);
        for n in 2..=6 {
            assert_eq!(ml_basis(n, n, Some(&Multidegree::multilinear(n))).unwrap().len(), n - 1);
        }
        assert!(ml_basis(3, 1, None).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(lie_span_oracle(2, 2, None).unwrap().dim(), 1);
        assert_eq!(lie_span_oracle(3, 3, Some(&Multidegree::multilinear(3))).unwrap().dim(), 2);
        assert_eq!(lie_span_oracle(1, 2, None).unwrap().dim(), 0);
    }

    #[test]
    fn opening_brackets_law() {
        // [[...[x_a, x_b], ...], x_z] = [x_a, x_b] x_c ... x_z
        for word in crate::perm::basis_sequences(5, 1, 3).into_iter().chain([vec![3, 1, 2, 2, 1, 3]]) {
            let lhs = left_normed_commutator(&word).unwrap();
            let mut rhs = left_normed_commutator(&word[..2]).unwrap();
            for &x in &word[2..] {
                rhs = rhs.multiply(&PermPolynomial::generator(x).unwrap());
            }
            assert_eq!(lhs, rhs, "{word:?}");
        }
    }
}
