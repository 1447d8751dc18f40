#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::Zero;
use permalg::envelope::MetabelianLieAlgebra;
use permalg::perm::{enumerate_basis, Multidegree};
use permalg::rational::{int, Rational};
use permalg::PermPolynomial;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c: i64 = rng.gen_range(-4..=4);
        if c != 0 {
            return int(c);
        }
    }
}

pub fn algebras_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras")
}

/// Multidegrees over exactly `k` generators (the last one occurring) with total `n`.
pub fn multidegrees_using(k: usize, n: usize) -> Vec<Multidegree> {
    fn go(k: usize, left: usize, acc: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
        if acc.len() + 1 == k {
            if left > 0 {
                let mut v = acc.clone();
                v.push(left as u32);
                out.push(Multidegree::new(v));
            }
            return;
        }
        for e in 0..=left {
            acc.push(e as u32);
            go(k, left - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::new(), &mut out);
    out
}

/// A random combination of degree-`n` monomials on `k` generators.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, k: usize, n: usize, terms: usize) -> PermPolynomial {
    let basis = enumerate_basis(k, n, None).unwrap();
    let mut p = PermPolynomial::zero();
    for _ in 0..terms {
        let m = basis.choose(rng).unwrap().clone();
        p += PermPolynomial::term(nonzero_coeff(rng), m);
    }
    p
}

fn small_matrix(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()).collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = Rational::zero();
                    for (k, bk) in b.iter().enumerate() {
                        s += &a[i][k] * &bk[j];
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// `A ⋉ V` with an abelian `A` acting on an abelian `V` by polynomials in
/// one random matrix, plus a central element `c` with `[a_i, a_j] = λ_ij c`,
/// written in a random basis. Dimension is `a + v + 1`.
pub fn random_metabelian(rng: &mut ChaCha8Rng, dim: usize) -> MetabelianLieAlgebra {
    assert!(dim >= 2);
    let (a, v) = match dim {
        2 => (1, 1),
        _ => {
            let a = rng.gen_range(1..=dim - 2);
            (a, dim - 1 - a)
        }
    };
    let central = dim > 2;
    let labels: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
    let mut alg = MetabelianLieAlgebra::abelian_with(labels.clone()).unwrap();
    let m = small_matrix(rng, v);
    let m2 = mat_mul(&m, &m);
    let mats: Vec<Vec<Vec<Rational>>> = (0..a)
        .map(|_| {
            let (p, q, r) = (int(rng.gen_range(-1..=1)), int(rng.gen_range(-1..=2)), int(rng.gen_range(-1..=1)));
            (0..v)
                .map(|i| {
                    (0..v)
                        .map(|j| {
                            let id = if i == j { r.clone() } else { Rational::zero() };
                            &p * &m[i][j] + &q * &m2[i][j] + id
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    // Basis order: A (0..a), V (a..a+v), c (last) when central.
    for (i, mi) in mats.iter().enumerate() {
        for k in 0..v {
            let mut val = vec![Rational::zero(); dim];
            for (j, row) in mi.iter().enumerate() {
                val[a + j] = row[k].clone();
            }
            alg.set_bracket(i, a + k, val).unwrap();
        }
    }
    if central {
        for i in 0..a {
            for j in i + 1..a {
                let mut val = vec![Rational::zero(); dim];
                val[dim - 1] = int(rng.gen_range(-2..=2));
                alg.set_bracket(i, j, val).unwrap();
            }
        }
    }
    loop {
        let p: Vec<Vec<Rational>> = (0..dim)
            .map(|c| (0..dim).map(|r| if r == c { int(1) } else { int(rng.gen_range(-1..=1)) }).collect())
            .collect();
        if let Ok(changed) = alg.change_basis(&p, labels.clone()) {
            return changed;
        }
    }
}

/// A product of original basis letters with exactly one dotted letter.
pub fn random_dotted_word(rng: &mut ChaCha8Rng, labels: &[String], max_len: usize) -> String {
    let len = rng.gen_range(1..=max_len);
    let dot = rng.gen_range(0..len);
    (0..len)
        .map(|i| {
            let l = labels.choose(rng).unwrap();
            if i == dot {
                format!("d({l})")
            } else {
                l.clone()
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
