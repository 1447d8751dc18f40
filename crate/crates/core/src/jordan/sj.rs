use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::jordan::{JordanExpr, JordanTree};
use crate::perm::{basis_sequences, span_solve, Multidegree, PermPolynomial, Subspace};

/// One multidegree slice of SJ(X) with the trees that span it.
#[derive(Debug, Clone)]
pub struct SjSlice {
    pub space: Subspace,
    /// Independent trees and their expansions, in insertion order.
    pub witnesses: Vec<(JordanTree, PermPolynomial)>,
}

/// Memoized multidegree slices of the anticommutator subalgebra SJ(X).
///
/// A slice of total degree `n > 1` is spanned by `{T, S}` for basis trees
/// `T`, `S` of complementary smaller slices.
#[derive(Debug, Default)]
pub struct SjTable {
    slices: HashMap<Multidegree, SjSlice>,
}

impl SjTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn slice(&mut self, md: &Multidegree) -> Result<&SjSlice> {
        self.ensure(md)?;
        Ok(&self.slices[md])
    }

    fn ensure(&mut self, md: &Multidegree) -> Result<()> {
        if self.slices.contains_key(md) {
            return Ok(());
        }
        if md.is_zero() {
            return Err(Error::InvalidDimension("empty multidegree".into()));
        }
        let mut space = Subspace::multidegree(md.generators(), md.clone())?;
        let mut witnesses = Vec::new();
        if md.total() == 1 {
            let g = md.generators() as u32;
            let t = JordanTree::Gen(g);
            let e = t.expand();
            space.insert(&e)?;
            witnesses.push((t, e));
        } else {
            let parts = md.proper_parts();
            for part in &parts {
                self.ensure(part)?;
            }
            'outer: for small in &parts {
                let large = md.checked_sub(small).expect("proper part");
                if small.total() > large.total() || (small.total() == large.total() && small > &large) {
                    continue;
                }
                let same = small == &large;
                let ws = &self.slices[small].witnesses;
                let wl = &self.slices[&large].witnesses;
                for (i, (ts, es)) in ws.iter().enumerate() {
                    let start = if same { i } else { 0 };
                    for (tl, el) in &wl[start..] {
                        let cand = es.anticommutator(el);
                        if space.insert(&cand)? {
                            let tree = if small.total() == large.total() {
                                JordanTree::anti(ts.clone(), tl.clone())
                            } else {
                                JordanTree::anti(tl.clone(), ts.clone())
                            };
                            witnesses.push((tree, cand));
                            if space.is_full() {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        self.slices.insert(md.clone(), SjSlice { space, witnesses });
        Ok(())
    }

    /// Writes one homogeneous polynomial through the slice witnesses.
    pub fn express_component(&mut self, md: &Multidegree, g: &PermPolynomial) -> Result<Option<JordanExpr>> {
        let slice = self.slice(md)?;
        let vectors: Vec<PermPolynomial> = slice.witnesses.iter().map(|(_, e)| e.clone()).collect();
        let Some(coords) = span_solve(&vectors, g)? else {
            return Ok(None);
        };
        let mut out = JordanExpr::zero();
        for ((t, _), c) in slice.witnesses.iter().zip(coords) {
            out.add_term(t.clone(), c);
        }
        Ok(Some(out))
    }
}

/// The degree-`n` component of SJ(X) on `k` generators.
#[derive(Debug, Clone)]
pub struct SjSpan {
    pub space: Subspace,
    pub witnesses: Vec<(JordanTree, PermPolynomial)>,
}

impl SjSpan {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Exponent vectors over `k` generators with total `n`.
pub(crate) fn multidegrees(k: usize, n: usize) -> Vec<Multidegree> {
    let mut out: Vec<Multidegree> = basis_sequences(n, 1, k as u32)
        .into_iter()
        .map(Multidegree::of_letters)
        .collect();
    out.sort();
    out
}

pub fn sj_span(k: usize, n: usize) -> Result<SjSpan> {
    sj_span_with(&mut SjTable::new(), k, n)
}

pub(crate) fn sj_span_with(table: &mut SjTable, k: usize, n: usize) -> Result<SjSpan> {
    let mut space = Subspace::degree(k, n)?;
    let mut witnesses = Vec::new();
    for md in multidegrees(k, n) {
        for (t, e) in &table.slice(&md)?.witnesses {
            space.insert(e)?;
            witnesses.push((t.clone(), e.clone()));
        }
    }
    Ok(SjSpan { space, witnesses })
}

/// Writes `g` as a combination of anticommutator trees, component by
/// component. Fails on a component that is not in SJ(X), which can only
/// happen in degree two.
pub fn jordan_express(g: &PermPolynomial) -> Result<JordanExpr> {
    jordan_express_with(&mut SjTable::new(), g)
}

pub fn jordan_express_with(table: &mut SjTable, g: &PermPolynomial) -> Result<JordanExpr> {
    let mut out = JordanExpr::zero();
    for (md, comp) in g.components() {
        match table.express_component(&md, &comp)? {
            Some(e) => out = out.add(&e),
            None => return Err(Error::NotJordan(comp)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::dimension;
    use crate::rational::{int, ratio};

    fn p(terms: &[(i64, &[u32])]) -> PermPolynomial {
        PermPolynomial::from_words(terms.iter().map(|(c, w)| (int(*c), *w))).unwrap()
    }

    fn t2(a: u32, b: u32) -> JordanTree {
        JordanTree::anti(JordanTree::Gen(a), JordanTree::Gen(b))
    }

    #[test]
    fn span_dimensions() {
        assert_eq!(sj_span(2, 3).unwrap().dim() as u128, dimension(2, 3));
        assert_eq!(sj_span(2, 2).unwrap().dim(), 3);
        let mut t = SjTable::new();
        assert_eq!(t.slice(&Multidegree::multilinear(3)).unwrap().space.dim(), 3);
    }

    #[test]
    fn witnesses_expand_to_their_vectors() {
        let s = sj_span(3, 4).unwrap();
        for (t, e) in &s.witnesses {
            assert_eq!(t.expand(), *e);
        }
        assert_eq!(s.witnesses.len(), s.dim());
    }

    #[test]
    fn degree_three_formula() {
        let e = jordan_express(&p(&[(1, &[1, 2, 3])])).unwrap();
        let terms: Vec<_> = e.terms().map(|(t, c)| (t.clone(), c.clone())).collect();
        let expected = [
            (JordanTree::anti(t2(1, 2), JordanTree::Gen(3)), ratio(-1, 4)),
            (JordanTree::anti(t2(2, 3), JordanTree::Gen(1)), ratio(3, 4)),
            (JordanTree::anti(t2(1, 3), JordanTree::Gen(2)), ratio(-1, 4)),
        ];
        assert_eq!(terms.len(), 3);
        for x in &expected {
            assert!(terms.contains(x), "missing {x:?}");
        }
        assert_eq!(e.expand(), p(&[(1, &[1, 2, 3])]));
    }

    #[test]
    fn symmetric_degree_two() {
        let e = jordan_express(&p(&[(1, &[1, 2]), (1, &[2, 1])])).unwrap();
        assert_eq!(e.to_string(), "{x1,x2}");
        match jordan_express(&p(&[(1, &[1, 2])])) {
            Err(Error::NotJordan(c)) => assert_eq!(c, p(&[(1, &[1, 2])])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mixed_degrees() {
        let g = p(&[(2, &[3]), (1, &[1, 1]), (5, &[2, 1, 1, 3])]);
        assert_eq!(jordan_express(&g).unwrap().expand(), g);
    }
}
