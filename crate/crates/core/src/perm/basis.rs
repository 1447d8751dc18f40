use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::PermMonomial;

/// Exponent vector over generators `x1, x2, ...`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    /// `(1, 1, ..., 1)` with `n` entries.
    pub fn multilinear(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn of_letters<I: IntoIterator<Item = u32>>(letters: I) -> Self {
        let mut e = Vec::new();
        for l in letters {
            let i = l as usize - 1;
            if e.len() <= i {
                e.resize(i + 1, 0);
            }
            e[i] += 1;
        }
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, generator: u32) -> u32 {
        self.0.get(generator as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Number of generators the multidegree refers to (highest index used).
    pub fn generators(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters with multiplicity, sorted.
    pub fn letters(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.total());
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
        }
        out
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0)).collect())
    }

    /// `self − other`, if `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        if other.0.len() > self.0.len() && other.0[self.0.len()..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut e = self.0.clone();
        for (i, &o) in other.0.iter().enumerate() {
            if i >= e.len() {
                break;
            }
            e[i] = e[i].checked_sub(o)?;
        }
        Some(Self::new(e))
    }

    /// All nonzero `m ≤ self` with `m ≠ self`, in increasing order.
    pub fn proper_parts(&self) -> Vec<Multidegree> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    (0..=e).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let mut parts: Vec<_> = out
            .into_iter()
            .map(Multidegree::new)
            .filter(|m| !m.is_zero() && m != self)
            .collect();
        parts.sort();
        parts
    }
}

impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `k · C(n+k−2, n−1)`: the number of degree-`n` basis words on `k` letters.
pub fn dimension(k: usize, n: usize) -> u128 {
    if k == 0 || n == 0 {
        return 0;
    }
    k as u128 * num_integer::binomial((n + k - 2) as u128, (n - 1) as u128)
}

/// Non-decreasing sequences of length `len` over `lo..=hi`, lexicographic.
pub(crate) fn sorted_sequences(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(len, x, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 || lo <= hi {
        rec(len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Canonical monomials of degree `n` on `k` generators, optionally restricted
/// to one multidegree. Ordered by head, then tail lexicographically.
pub fn enumerate_basis(k: usize, n: usize, multidegree: Option<&Multidegree>) -> Result<Vec<PermMonomial>> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidDimension(format!("need k >= 1 and n >= 1, got k={k}, n={n}")));
    }
    match multidegree {
        Some(md) => {
            if md.total() != n {
                return Err(Error::MultidegreeMismatch { total: md.total(), degree: n });
            }
            if md.generators() > k {
                return Err(Error::InvalidDimension(format!(
                    "multidegree {md} uses more than {k} generators"
                )));
            }
            let letters = md.letters();
            let mut out = Vec::new();
            let mut last = None;
            for (pos, &h) in letters.iter().enumerate() {
                if last == Some(h) {
                    continue;
                }
                last = Some(h);
                let mut tail = letters.clone();
                tail.remove(pos);
                out.push(PermMonomial::from_sorted(h, tail));
            }
            Ok(out)
        }
        None => {
            let tails = sorted_sequences(n - 1, 1, k as u32);
            Ok((1..=k as u32)
                .flat_map(|h| tails.iter().map(move |t| PermMonomial::from_sorted(h, t.clone())))
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ms: &[PermMonomial]) -> Vec<Vec<u32>> {
        ms.iter().map(|m| m.letters()).collect()
    }

    #[test]
    fn enumerate_examples() {
        let b = enumerate_basis(2, 3, None).unwrap();
        assert_eq!(
            words(&b),
            vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 2], vec![2, 1, 1], vec![2, 1, 2], vec![2, 2, 2]]
        );
        let b = enumerate_basis(3, 3, Some(&Multidegree::multilinear(3))).unwrap();
        assert_eq!(words(&b), vec![vec![1, 2, 3], vec![2, 1, 3], vec![3, 1, 2]]);
        assert_eq!(words(&enumerate_basis(1, 4, None).unwrap()), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn enumerate_errors() {
        assert!(matches!(
            enumerate_basis(3, 4, Some(&Multidegree::multilinear(3))),
            Err(Error::MultidegreeMismatch { total: 3, degree: 4 })
        ));
        assert!(enumerate_basis(0, 2, None).is_err());
        assert!(enumerate_basis(2, 3, Some(&Multidegree::multilinear(3))).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(2, 3), 6);
        assert_eq!(dimension(5, 1), 5);
        assert_eq!(dimension(3, 2), 9);
    }

    #[test]
    fn dimension_matches_enumeration() {
        for k in 1..=4 {
            for n in 1..=7 {
                assert_eq!(enumerate_basis(k, n, None).unwrap().len() as u128, dimension(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn multidegree_arithmetic() {
        let m = Multidegree::new(vec![2, 1, 0]);
        assert_eq!(m.exponents(), &[2, 1]);
        assert_eq!(m.letters(), vec![1, 1, 2]);
        assert_eq!(m.proper_parts().len(), 4);
        assert_eq!(m.checked_sub(&Multidegree::new(vec![1, 1])), Some(Multidegree::new(vec![1])));
        assert_eq!(m.checked_sub(&Multidegree::new(vec![0, 0, 1])), None);
    }
}
