use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::envelope::dense::{apply_columns, axpy, invert_columns, is_zero, unit, zero_vec, Echelon, Vector};
use crate::error::{Error, Result};
use crate::rational::{format_rational, format_sum, parse_rational, Rational};

/// A finite-dimensional Lie algebra given by structure constants on a
/// basis `e_0, …, e_{n-1}`. Only brackets `[e_i, e_j]` with `i < j` are
/// stored; the rest follow from antisymmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct MetabelianLieAlgebra {
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vector>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    value: Vec<(usize, String)>,
}

/// Jacobi and metabelian violations, as 1-based basis tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub jacobi_violations: Vec<[usize; 3]>,
    pub metabelian_violations: Vec<[usize; 4]>,
}

impl MetabelianLieAlgebra {
    /// An algebra with all brackets zero.
    pub fn abelian_with(labels: Vec<String>) -> Result<Self> {
        Alphabet::from_names(labels.clone()).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
        if labels.is_empty() {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        Ok(Self { labels, brackets: BTreeMap::new() })
    }

    /// `e1, …, en` with all brackets zero.
    pub fn abelian(n: usize) -> Result<Self> {
        Self::abelian_with((1..=n).map(|i| format!("e{i}")).collect())
    }

    /// `[e1, e2] = e3`.
    pub fn heisenberg() -> Self {
        let mut h = Self::abelian(3).expect("dimension 3");
        h.set_bracket(0, 1, unit(3, 2)).expect("fresh pair");
        h
    }

    /// Sets `[e_i, e_j]` for `i < j` (0-based). A nonzero pair may be set once.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        let n = self.dim();
        if i >= j || j >= n {
            return Err(Error::InvalidAlgebra(format!("bracket pair ({}, {}) must satisfy i < j <= {n}", i + 1, j + 1)));
        }
        if value.len() != n {
            return Err(Error::InvalidAlgebra(format!("bracket value has length {}, expected {n}", value.len())));
        }
        if self.brackets.contains_key(&(i, j)) {
            return Err(Error::InvalidAlgebra(format!("duplicate bracket pair ({}, {})", i + 1, j + 1)));
        }
        if !is_zero(&value) {
            self.brackets.insert((i, j), value);
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
        let labels = match file.basis {
            Some(b) if b.len() != file.dim => {
                return Err(Error::InvalidAlgebra(format!("basis has {} names, dim is {}", b.len(), file.dim)))
            }
            Some(b) => b,
            None => (1..=file.dim).map(|i| format!("e{i}")).collect(),
        };
        let mut alg = Self::abelian_with(labels)?;
        let n = alg.dim();
        let mut seen = std::collections::BTreeSet::new();
        for entry in file.brackets {
            if !seen.insert((entry.i, entry.j)) {
                return Err(Error::InvalidAlgebra(format!("duplicate bracket pair ({}, {})", entry.i, entry.j)));
            }
            if entry.i == 0 || entry.j == 0 {
                return Err(Error::InvalidAlgebra("basis indices are 1-based".into()));
            }
            let mut value = zero_vec(n);
            for (k, q) in entry.value {
                if k == 0 || k > n {
                    return Err(Error::InvalidAlgebra(format!("basis index {k} out of range 1..={n}")));
                }
                value[k - 1] += parse_rational(&q)?;
            }
            alg.set_bracket(entry.i - 1, entry.j - 1, value)?;
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        let brackets = self
            .brackets
            .iter()
            .filter(|(_, v)| !is_zero(v))
            .map(|(&(i, j), v)| BracketEntry {
                i: i + 1,
                j: j + 1,
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| !num_traits::Zero::is_zero(*q))
                    .map(|(k, q)| (k + 1, format_rational(q)))
                    .collect(),
            })
            .collect();
        let file = AlgebraFile { dim: self.dim(), basis: Some(self.labels.clone()), brackets };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        let n = self.dim();
        match i.cmp(&j) {
            Equal => zero_vec(n),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| zero_vec(n)),
            Greater => self.brackets.get(&(j, i)).map(|v| v.iter().map(|x| -x).collect()).unwrap_or_else(|| zero_vec(n)),
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !num_traits::Zero::is_zero(*a)) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !num_traits::Zero::is_zero(*b)) {
                if i != j {
                    axpy(&mut out, &(a * b), &self.bracket(i, j));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Validation {
        let n = self.dim();
        let mut jacobi = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let mut s = self.bracket_vectors(&self.bracket(i, j), &ek);
                    axpy(&mut s, &Rational::from_integer(1.into()), &self.bracket_vectors(&self.bracket(j, k), &ei));
                    axpy(&mut s, &Rational::from_integer(1.into()), &self.bracket_vectors(&self.bracket(k, i), &ej));
                    if !is_zero(&s) {
                        jacobi.push([i + 1, j + 1, k + 1]);
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut metabelian = Vec::new();
        for (p, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[p + 1..] {
                if !is_zero(&self.bracket_vectors(&self.bracket(a, b), &self.bracket(c, d))) {
                    metabelian.push([a + 1, b + 1, c + 1, d + 1]);
                }
            }
        }
        Validation { valid: jacobi.is_empty() && metabelian.is_empty(), jacobi_violations: jacobi, metabelian_violations: metabelian }
    }

    /// Structure constants in the basis given by the columns of `p`
    /// (coordinates in the current basis), with the given labels.
    pub fn change_basis(&self, p: &[Vector], labels: Vec<String>) -> Result<Self> {
        let n = self.dim();
        if p.len() != n || p.iter().any(|c| c.len() != n) || labels.len() != n {
            return Err(Error::InvalidAlgebra("basis change must be square".into()));
        }
        let q = invert_columns(p).ok_or_else(|| Error::InvalidAlgebra("basis change is singular".into()))?;
        let mut out = Self::abelian_with(labels)?;
        for a in 0..n {
            for b in a + 1..n {
                let v = apply_columns(&q, &self.bracket_vectors(&p[a], &p[b]));
                out.set_bracket(a, b, v)?;
            }
        }
        Ok(out)
    }

    /// Renders a coordinate vector as `e1 - 2e3`.
    pub fn render_vector(&self, v: &[Rational]) -> String {
        render_vector(&self.labels, v)
    }

    /// Chooses a basis `Y` of `[L, L]` and a complement `Z` of basis vectors.
    ///
    /// Basis vectors lying in `[L, L]` are taken first; if they do not span
    /// it, rows of the echelonized bracket span fill the rest.
    pub fn split_basis(&self) -> BasisSplit {
        let n = self.dim();
        let mut derived = Echelon::default();
        for i in 0..n {
            for j in i + 1..n {
                derived.insert(&self.bracket(i, j));
            }
        }
        let mut chosen = Echelon::default();
        let mut y: Vec<Vector> = Vec::new();
        let mut y_labels = Vec::new();
        for i in 0..n {
            let e = unit(n, i);
            if derived.contains(&e) && chosen.insert(&e) {
                y.push(e);
                y_labels.push(self.labels[i].clone());
            }
        }
        let mut fresh = 0;
        if chosen.rank() < derived.rank() {
            for row in derived.rows().cloned().collect::<Vec<_>>() {
                if chosen.insert(&row) {
                    y.push(row);
                    y_labels.push(loop {
                        fresh += 1;
                        let name = format!("y{fresh}");
                        if !self.labels.contains(&name) {
                            break name;
                        }
                    });
                }
            }
        }
        let mut z = Vec::new();
        for i in 0..n {
            if chosen.insert(&unit(n, i)) {
                z.push(i);
            }
        }
        let changed = fresh > 0;
        let mut columns = y.clone();
        columns.extend(z.iter().map(|&i| unit(n, i)));
        let mut labels = y_labels;
        labels.extend(z.iter().map(|&i| self.labels[i].clone()));
        BasisSplit { y, z, columns, labels, changed }
    }
}

fn render_vector(labels: &[String], v: &[Rational]) -> String {
    format_sum(
        v.iter()
            .enumerate()
            .filter(|(_, q)| !num_traits::Zero::is_zero(*q))
            .map(|(i, q)| (q.clone(), labels[i].clone())),
    )
}

/// `Y ∪ Z` with `Y` spanning `[L, L]`, ordered `Y` then `Z`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisSplit {
    /// Basis of the derived algebra, in original coordinates.
    pub y: Vec<Vector>,
    /// Original basis indices forming the complement.
    pub z: Vec<usize>,
    /// All new basis vectors, `Y` first, in original coordinates.
    pub columns: Vec<Vector>,
    pub labels: Vec<String>,
    /// True when some element of `Y` is not an original basis vector.
    pub changed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitSummary {
    pub y: Vec<String>,
    pub z: Vec<String>,
    /// Each new basis vector in original coordinates, e.g. `y1 = e1 + e2`.
    pub definitions: Vec<String>,
    pub basis_changed: bool,
}

impl BasisSplit {
    pub fn summary(&self, algebra: &MetabelianLieAlgebra) -> SplitSummary {
        let ny = self.y.len();
        SplitSummary {
            y: self.labels[..ny].to_vec(),
            z: self.labels[ny..].to_vec(),
            definitions: self
                .labels
                .iter()
                .zip(&self.columns)
                .filter(|(l, c)| algebra.labels.iter().position(|x| x == *l).map(|i| unit(c.len(), i)) != Some((*c).clone()))
                .map(|(l, c)| format!("{l} = {}", algebra.render_vector(c)))
                .collect(),
            basis_changed: self.changed,
        }
    }
}
