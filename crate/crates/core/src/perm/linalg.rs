//! Exact linear algebra over the rationals on homogeneous components.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{enumerate_basis, Multidegree, PermMonomial, PermPolynomial};
use crate::rational::Rational;

/// The finite-dimensional piece of P(X) a subspace lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambient {
    Degree { gens: usize, degree: usize },
    Multidegree { gens: usize, multidegree: Multidegree },
}

/// A subspace of one homogeneous component, kept in reduced row-echelon form
/// against the component's monomial enumeration.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: Ambient,
    columns: Vec<PermMonomial>,
    index: HashMap<PermMonomial, usize>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: Ambient) -> Result<Self> {
        let columns = match &ambient {
            Ambient::Degree { gens, degree } => enumerate_basis(*gens, *degree, None)?,
            Ambient::Multidegree { gens, multidegree } => {
                enumerate_basis(*gens, multidegree.total(), Some(multidegree))?
            }
        };
        let index = columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self { ambient, columns, index, rows: Vec::new(), pivots: Vec::new() })
    }

    pub fn degree(gens: usize, degree: usize) -> Result<Self> {
        Self::new(Ambient::Degree { gens, degree })
    }

    pub fn multidegree(gens: usize, multidegree: Multidegree) -> Result<Self> {
        Self::new(Ambient::Multidegree { gens, multidegree })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.columns.len()
    }

    pub fn columns(&self) -> &[PermMonomial] {
        &self.columns
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `p` in the ambient monomial basis.
    pub fn to_vector(&self, p: &PermPolynomial) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.columns.len()];
        for (m, c) in p.terms() {
            let i = *self.index.get(m).ok_or(Error::MixedComponents)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &[Rational]) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (m, c) in self.columns.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if v[piv].is_zero() {
                continue;
            }
            let f = v[piv].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// Adds `p` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, p: &PermPolynomial) -> Result<bool> {
        let v = self.reduce(self.to_vector(p)?);
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = Rational::one() / &v[piv];
        let v: Vec<Rational> = v.into_iter().map(|x| x * &inv).collect();
        for row in &mut self.rows {
            if row[piv].is_zero() {
                continue;
            }
            let f = row[piv].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains(&self, p: &PermPolynomial) -> Result<bool> {
        Ok(self.reduce(self.to_vector(p)?).iter().all(|x| x.is_zero()))
    }

    /// The reduced row-echelon basis as polynomials.
    pub fn basis(&self) -> Vec<PermPolynomial> {
        self.rows.iter().map(|r| self.from_vector(r)).collect()
    }
}

/// Solves `Σ c_j · columns[j] = target`; free variables are set to zero.
pub fn solve_linear(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let n = columns.len();
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][n].clone();
    }
    Some(x)
}

/// Expresses `target` in the span of `vectors`. All nonzero inputs must share
/// one multidegree.
pub fn span_solve(vectors: &[PermPolynomial], target: &PermPolynomial) -> Result<Option<Vec<Rational>>> {
    let mut md: Option<Multidegree> = None;
    for p in vectors.iter().chain(std::iter::once(target)) {
        if p.is_zero() {
            continue;
        }
        let d = p.multidegree().ok_or(Error::MixedComponents)?;
        match &md {
            None => md = Some(d),
            Some(e) if *e != d => return Err(Error::MixedComponents),
            _ => {}
        }
    }
    let support: BTreeSet<&PermMonomial> =
        vectors.iter().chain(std::iter::once(target)).flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    let index: HashMap<&PermMonomial, usize> = support.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let to_vec = |p: &PermPolynomial| {
        let mut v = vec![Rational::zero(); index.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let cols: Vec<_> = vectors.iter().map(to_vec).collect();
    Ok(solve_linear(&cols, &to_vec(target)))
}
