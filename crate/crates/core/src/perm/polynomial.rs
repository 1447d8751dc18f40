use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::perm::{Multidegree, PermMonomial};
use crate::rational::{format_sum, Rational};

/// A finite sum of perm monomials with nonzero rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PermPolynomial {
    terms: BTreeMap<PermMonomial, Rational>,
}

impl PermPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(index: u32) -> Result<Self> {
        Ok(Self::monomial(PermMonomial::generator(index)?))
    }

    pub fn monomial(m: PermMonomial) -> Self {
        Self::term(Rational::from_integer(1.into()), m)
    }

    pub fn term(c: Rational, m: PermMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Builds `Σ c·canonicalize(word)`.
    pub fn from_words<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, &'a [u32])>,
    {
        let mut p = Self::zero();
        for (c, w) in terms {
            p.add_term(crate::perm::canonicalize(w)?, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: PermMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PermMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PermMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.multiply(other) - other.multiply(self)
    }

    /// `{self, other} = self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.multiply(other) + other.multiply(self)
    }

    /// Applies a linear map defined on monomials.
    pub fn map_linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&PermMonomial) -> Self,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out += f(m).scale(c);
        }
        out
    }

    /// Splits into multi-homogeneous components.
    pub fn components(&self) -> BTreeMap<Multidegree, PermPolynomial> {
        let mut out: BTreeMap<Multidegree, PermPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// The common multidegree, `None` for zero or inhomogeneous input.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.keys().map(|m| m.multidegree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_generator(&self) -> u32 {
        self.terms.keys().map(|m| m.max_generator()).max().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Renders higher degrees first; within a degree by head, then tail.
    pub fn render(&self, names: &Alphabet) -> String {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        format_sum(keys.into_iter().map(|(m, c)| (c.clone(), m.render(names))))
    }
}

impl fmt::Display for PermPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

impl From<PermMonomial> for PermPolynomial {
    fn from(m: PermMonomial) -> Self {
        Self::monomial(m)
    }
}

impl AddAssign<&PermPolynomial> for PermPolynomial {
    fn add_assign(&mut self, rhs: &PermPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for PermPolynomial {
    fn add_assign(&mut self, rhs: PermPolynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&PermPolynomial> for PermPolynomial {
    fn sub_assign(&mut self, rhs: &PermPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for PermPolynomial {
    type Output = PermPolynomial;
    fn add(mut self, rhs: PermPolynomial) -> PermPolynomial {
        self += rhs;
        self
    }
}

impl Add<&PermPolynomial> for &PermPolynomial {
    type Output = PermPolynomial;
    fn add(self, rhs: &PermPolynomial) -> PermPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for PermPolynomial {
    type Output = PermPolynomial;
    fn sub(mut self, rhs: PermPolynomial) -> PermPolynomial {
        self -= &rhs;
        self
    }
}

impl Sub<&PermPolynomial> for &PermPolynomial {
    type Output = PermPolynomial;
    fn sub(self, rhs: &PermPolynomial) -> PermPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for PermPolynomial {
    type Output = PermPolynomial;
    fn neg(self) -> PermPolynomial {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &PermPolynomial {
    type Output = PermPolynomial;
    fn mul(self, rhs: &PermPolynomial) -> PermPolynomial {
        self.multiply(rhs)
    }
}
