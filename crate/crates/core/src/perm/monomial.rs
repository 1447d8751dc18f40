use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::perm::Multidegree;

/// A basis word of P(X): `x_head x_t1 x_t2 ...` with `t1 <= t2 <= ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermMonomial {
    head: u32,
    tail: Vec<u32>,
}

/// Puts a word into canonical form: first letter kept, rest sorted.
pub fn canonicalize(word: &[u32]) -> Result<PermMonomial> {
    let (&head, rest) = word.split_first().ok_or(Error::EmptyMonomial)?;
    PermMonomial::new(head, rest.to_vec())
}

impl PermMonomial {
    pub fn new(head: u32, mut tail: Vec<u32>) -> Result<Self> {
        if head == 0 || tail.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        tail.sort_unstable();
        Ok(Self { head, tail })
    }

    /// Builds a monomial from a tail that is already sorted and nonzero.
    pub(crate) fn from_sorted(head: u32, tail: Vec<u32>) -> Self {
        debug_assert!(tail.windows(2).all(|w| w[0] <= w[1]));
        Self { head, tail }
    }

    pub fn generator(index: u32) -> Result<Self> {
        Self::new(index, Vec::new())
    }

    pub fn head(&self) -> u32 {
        self.head
    }

    pub fn tail(&self) -> &[u32] {
        &self.tail
    }

    pub fn degree(&self) -> usize {
        1 + self.tail.len()
    }

    /// The word as a letter sequence, head first.
    pub fn letters(&self) -> Vec<u32> {
        let mut w = Vec::with_capacity(self.degree());
        w.push(self.head);
        w.extend_from_slice(&self.tail);
        w
    }

    pub fn max_generator(&self) -> u32 {
        self.tail.last().copied().unwrap_or(0).max(self.head)
    }

    pub fn multidegree(&self) -> Multidegree {
        Multidegree::of_letters(std::iter::once(self.head).chain(self.tail.iter().copied()))
    }

    /// Product in P(X): the head of `self` survives, everything else is
    /// merged into the sorted tail.
    pub fn mul(&self, other: &PermMonomial) -> PermMonomial {
        let mut tail = Vec::with_capacity(self.tail.len() + other.degree());
        let mut rhs = other.letters();
        rhs.sort_unstable();
        let (mut i, mut j) = (0, 0);
        while i < self.tail.len() && j < rhs.len() {
            if self.tail[i] <= rhs[j] {
                tail.push(self.tail[i]);
                i += 1;
            } else {
                tail.push(rhs[j]);
                j += 1;
            }
        }
        tail.extend_from_slice(&self.tail[i..]);
        tail.extend_from_slice(&rhs[j..]);
        PermMonomial { head: self.head, tail }
    }

    pub fn render(&self, names: &Alphabet) -> String {
        let mut s = names.name(self.head);
        for &t in &self.tail {
            s.push_str(&names.name(t));
        }
        s
    }
}

impl Ord for PermMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for PermMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PermMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Alphabet::default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let m = canonicalize(&[3, 2, 1]).unwrap();
        assert_eq!((m.head(), m.tail()), (3, &[1, 2][..]));
        let m = canonicalize(&[1, 2, 3]).unwrap();
        assert_eq!((m.head(), m.tail()), (1, &[2, 3][..]));
        let m = canonicalize(&[2, 3, 1]).unwrap();
        assert_eq!((m.head(), m.tail()), (2, &[1, 3][..]));
        assert_eq!(canonicalize(&[]), Err(Error::EmptyMonomial));
        assert_eq!(canonicalize(&[0, 1]), Err(Error::ZeroGenerator));
    }

    #[test]
    fn product_merges_tails() {
        let u = canonicalize(&[2, 1]).unwrap();
        let v = canonicalize(&[3]).unwrap();
        assert_eq!(u.mul(&v), canonicalize(&[2, 1, 3]).unwrap());
        let w = canonicalize(&[4, 1, 4]).unwrap();
        assert_eq!(u.mul(&w).letters(), vec![2, 1, 1, 4, 4]);
    }

    #[test]
    fn display() {
        assert_eq!(canonicalize(&[3, 2, 1]).unwrap().to_string(), "x3x1x2");
    }
}
