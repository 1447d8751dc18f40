use std::collections::HashMap;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::jordan::sj::{jordan_express_with, SjTable};
use crate::jordan::JordanExpr;
use crate::perm::{Multidegree, PermPolynomial, Subspace};
use crate::rational::ratio;

pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Which algebra the ideal is generated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealAmbient {
    /// The two-sided ideal of P(X).
    Perm,
    /// The ideal of SJ(X) under the anticommutator.
    Jordan,
}

/// One multidegree slice of the ideal generated by homogeneous elements of
/// SJ(X), either inside P(X) or inside SJ(X).
///
/// Perm slices close under left and right multiplication by generators;
/// Jordan slices close under anticommutation with SJ slices of the
/// complementary multidegree.
pub fn ideal_component(
    ambient: IdealAmbient,
    generators: &[PermPolynomial],
    multidegree: &Multidegree,
    bound: usize,
) -> Result<Subspace> {
    if multidegree.total() > bound {
        return Err(Error::DegreeBound { total: multidegree.total(), bound });
    }
    let mut sj = SjTable::new();
    let mut by_degree: HashMap<Multidegree, Vec<PermPolynomial>> = HashMap::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let md = g.multidegree().ok_or(Error::Inhomogeneous)?;
        jordan_express_with(&mut sj, g)?;
        by_degree.entry(md).or_default().push(g.clone());
    }
    let mut order = multidegree.proper_parts();
    order.push(multidegree.clone());
    let mut slices: HashMap<Multidegree, Vec<PermPolynomial>> = HashMap::new();
    for md in &order {
        let mut space = Subspace::multidegree(md.generators(), md.clone())?;
        for g in by_degree.get(md).into_iter().flatten() {
            space.insert(g)?;
        }
        match ambient {
            IdealAmbient::Perm => {
                for i in 1..=md.generators() as u32 {
                    let e = Multidegree::of_letters([i]);
                    let Some(rest) = md.checked_sub(&e).filter(|r| !r.is_zero()) else { continue };
                    let x = PermPolynomial::generator(i)?;
                    for v in &slices[&rest] {
                        space.insert(&x.multiply(v))?;
                        space.insert(&v.multiply(&x))?;
                    }
                }
            }
            IdealAmbient::Jordan => {
                for part in md.proper_parts() {
                    let rest = md.checked_sub(&part).expect("proper part");
                    let ideal_part = &slices[&part];
                    if ideal_part.is_empty() {
                        continue;
                    }
                    let ws: Vec<PermPolynomial> = sj.slice(&rest)?.witnesses.iter().map(|(_, e)| e.clone()).collect();
                    for v in ideal_part {
                        for s in &ws {
                            space.insert(&v.anticommutator(s))?;
                        }
                    }
                }
            }
        }
        slices.insert(md.clone(), space.basis());
        if md == multidegree {
            return Ok(space);
        }
    }
    unreachable!("target multidegree is last in the order")
}

/// The two-generator exceptional quotient: `I ⊂ SJ({x,y})` generated by
/// `{x,y}`, `x³`, `y²`, compared with the ideal `J` it generates in `P({x,y})`
/// at multidegree `x²y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CohnReport {
    pub generators: Vec<String>,
    pub normalization: String,
    pub slice: String,
    pub b: String,
    pub i_slice_dim: usize,
    pub i_slice_basis: Vec<String>,
    pub j_slice_dim: usize,
    pub j_slice_basis: Vec<String>,
    pub sj_slice_dim: usize,
    pub b_in_i: bool,
    pub b_in_j: bool,
    pub b_in_sj: bool,
    /// `b ∈ (J ∩ SJ) \ I`, so I is not the intersection and the quotient
    /// cannot be p⁺-special.
    pub exceptional: bool,
}

pub fn cohn_witness() -> Result<CohnReport> {
    let names = Alphabet::from_names(["x", "y"])?;
    let (x, y) = (JordanExpr::gen(1), JordanExpr::gen(2));
    let xy = x.product(&y);
    let cube = x.product(&x.product(&x)).scale(&ratio(1, 2));
    let square = y.product(&y).scale(&ratio(1, 2));
    let gens: Vec<PermPolynomial> = [&xy, &cube, &square].iter().map(|e| e.expand()).collect();
    let x_sq = x.product(&x).scale(&ratio(1, 2));
    let b = x_sq.product(&y).expand();

    let md = Multidegree::new(vec![2, 1]);
    let i_slice = ideal_component(IdealAmbient::Jordan, &gens, &md, DEFAULT_DEGREE_BOUND)?;
    let j_slice = ideal_component(IdealAmbient::Perm, &gens, &md, DEFAULT_DEGREE_BOUND)?;
    let mut sj = SjTable::new();
    let sj_slice = &sj.slice(&md)?.space;

    let b_in_i = i_slice.contains(&b)?;
    let b_in_j = j_slice.contains(&b)?;
    let b_in_sj = sj_slice.contains(&b)?;
    let show = |s: &Subspace| s.basis().iter().map(|p| primitive(p).render(&names)).collect::<Vec<_>>();
    Ok(CohnReport {
        generators: vec![
            format!("{{x,y}} = {}", gens[0].render(&names)),
            format!("x^3 := 1/2 {{x,{{x,x}}}} = {}", gens[1].render(&names)),
            format!("y^2 := 1/2 {{y,y}} = {}", gens[2].render(&names)),
        ],
        normalization: "the cube is taken as 1/2 {x,{x,x}} = 2xxx, a nonzero multiple of xxx; the ideal is unchanged"
            .into(),
        slice: "x^2y".into(),
        b: b.render(&names),
        i_slice_dim: i_slice.dim(),
        i_slice_basis: show(&i_slice),
        j_slice_dim: j_slice.dim(),
        j_slice_basis: show(&j_slice),
        sj_slice_dim: sj_slice.dim(),
        b_in_i,
        b_in_j,
        b_in_sj,
        exceptional: !b_in_i && b_in_j && b_in_sj,
    })
}

/// The positive integer multiple of `p` with coprime coefficients.
fn primitive(p: &PermPolynomial) -> PermPolynomial {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return p.clone();
    }
    let lead_negative = p.terms().last().is_some_and(|(_, c)| c.is_negative());
    let mut f = crate::rational::Rational::new(den, num);
    if lead_negative {
        f = -f;
    }
    p.scale(&f)
}
