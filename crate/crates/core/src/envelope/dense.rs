//! Small dense linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub(crate) type Vector = Vec<Rational>;

pub(crate) fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub(crate) fn unit(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub(crate) fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Rows in reduced echelon form, one pivot per row.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub(crate) fn reduce(&self, v: &[Rational]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &[Rational]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; false if it was already there.
    pub(crate) fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = Rational::one() / r[p].clone();
        for x in r.iter_mut() {
            *x *= inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                axpy(row, &-c, &r);
            }
        }
        let at = self.rows.iter().position(|(q, _)| *q > p).unwrap_or(self.rows.len());
        self.rows.insert(at, (p, r));
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &Vector> {
        self.rows.iter().map(|(_, r)| r)
    }
}

/// Inverse of the matrix whose columns are `cols`, returned as columns.
pub(crate) fn invert_columns(cols: &[Vector]) -> Option<Vec<Vector>> {
    let n = cols.len();
    // Row-major augmented matrix [A | I].
    let mut m: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row: Vector = cols.iter().map(|c| c[r].clone()).collect();
            row.extend(unit(n, r));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = Rational::one() / m[c][c].clone();
        for x in m[c].iter_mut() {
            *x *= inv.clone();
        }
        let pivot = m[c].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != c {
                let f = row[c].clone();
                axpy(row, &-f, &pivot);
            }
        }
    }
    Some((0..n).map(|c| (0..n).map(|r| m[r][n + c].clone()).collect()).collect())
}

/// `Σ_j cols[j] · v[j]`.
pub(crate) fn apply_columns(cols: &[Vector], v: &[Rational]) -> Vector {
    let mut out = zero_vec(cols.first().map_or(0, Vec::len));
    for (c, x) in cols.iter().zip(v) {
        axpy(&mut out, x, c);
    }
    out
}
