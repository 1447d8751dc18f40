use serde::Serialize;

use crate::envelope::rewrite::{Envelope, EnvelopeMonomial};
use crate::error::{Error, Result};
use crate::perm::basis_sequences;

/// Normal-form monomials of degrees `1..=max_degree`: every dotted letter
/// in degree 1, and `ż_{i1} z_{i2}⋯z_{in}` with `i1 ≤ … ≤ in` above.
pub fn basis_up_to(env: &Envelope, max_degree: usize) -> Result<Vec<Vec<EnvelopeMonomial>>> {
    if max_degree == 0 {
        return Err(Error::InvalidDimension("degree must be at least 1".into()));
    }
    let n = env.dim();
    let ny = env.y_count();
    let mut out = vec![(0..n).map(EnvelopeMonomial::letter).collect::<Vec<_>>()];
    for d in 2..=max_degree {
        let level = if ny == n {
            Vec::new()
        } else {
            basis_sequences(d, ny as u32 + 1, n as u32)
                .into_iter()
                .map(|w| {
                    let w: Vec<usize> = w.into_iter().map(|x| x as usize - 1).collect();
                    EnvelopeMonomial::new(w[0], w[1..].to_vec())
                })
                .collect()
        };
        out.push(level);
    }
    Ok(out)
}

/// Number of normal-form monomials of degree `d`.
pub fn basis_count(env: &Envelope, d: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::InvalidDimension("degree must be at least 1".into()));
    }
    if d == 1 {
        return Ok(env.dim() as u128);
    }
    let z = (env.dim() - env.y_count()) as u128;
    if z == 0 {
        return Ok(0);
    }
    // C(d + z - 1, d)
    let mut c: u128 = 1;
    for i in 1..=z - 1 {
        c = c
            .checked_mul(d as u128 + i)
            .ok_or_else(|| Error::InvalidDimension("count overflows".into()))?
            / i;
    }
    Ok(c)
}

/// Basis growth of the envelope with a numerical estimate of its
/// Gelfand–Kirillov dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub max_degree: usize,
    /// Basis monomials per degree, starting at degree 1.
    pub counts: Vec<u128>,
    /// `N(d)`, the number of basis monomials of degree at most `d`.
    pub cumulative: Vec<u128>,
    /// Degrees used by both fits.
    pub fit_range: [usize; 2],
    /// Extrapolated growth exponent.
    pub slope: f64,
    /// Least-squares slope of `ln N(d)` against `ln d`.
    pub raw_slope: f64,
}

fn least_squares(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Fits over `d` in `dmax/2 ..= dmax`.
///
/// `N(d) ~ c·d^r (1 + O(1/d))` converges slowly in `ln N / ln d`, so the
/// reported `slope` fits local exponents `ln(N(d)/N(d−1)) / ln(d/(d−1))`
/// as `r + b/d` and returns `r`. The plain log-log slope is kept as
/// `raw_slope`.
pub fn gk_estimate(env: &Envelope, max_degree: usize) -> Result<GrowthReport> {
    if max_degree < 4 {
        return Err(Error::InvalidDimension("growth fits need max degree at least 4".into()));
    }
    let counts = (1..=max_degree).map(|d| basis_count(env, d)).collect::<Result<Vec<_>>>()?;
    let mut cumulative = Vec::with_capacity(counts.len());
    let mut total: u128 = 0;
    for c in &counts {
        total = total.checked_add(*c).ok_or_else(|| Error::InvalidDimension("count overflows".into()))?;
        cumulative.push(total);
    }
    let lo = max_degree / 2;
    let n_at = |d: usize| cumulative[d - 1] as f64;
    let log_points: Vec<(f64, f64)> = (lo..=max_degree).map(|d| ((d as f64).ln(), n_at(d).ln())).collect();
    let (raw_slope, _) = least_squares(&log_points);
    let local: Vec<(f64, f64)> = (lo + 1..=max_degree)
        .map(|d| {
            let (a, b) = (d as f64, (d - 1) as f64);
            (1.0 / a, (n_at(d) / n_at(d - 1)).ln() / (a / b).ln())
        })
        .collect();
    let (_, slope) = least_squares(&local);
    Ok(GrowthReport { max_degree, counts, cumulative, fit_range: [lo, max_degree], slope, raw_slope })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::MetabelianLieAlgebra;

    fn env(a: MetabelianLieAlgebra) -> Envelope {
        Envelope::new(a).unwrap()
    }

    #[test]
    fn heisenberg_basis() {
        let h = env(MetabelianLieAlgebra::heisenberg());
        let b = basis_up_to(&h, 2).unwrap();
        let show = |l: &[EnvelopeMonomial]| l.iter().map(|m| h.render_monomial(m, false)).collect::<Vec<_>>();
        assert_eq!(show(&b[0]), ["d(e3)", "d(e1)", "d(e2)"]);
        assert_eq!(show(&b[1]), ["d(e1)*e1", "d(e1)*e2", "d(e2)*e2"]);
        let b = basis_up_to(&h, 8).unwrap();
        for d in 2..=8 {
            assert_eq!(b[d - 1].len(), d + 1);
            assert_eq!(basis_count(&h, d).unwrap(), d as u128 + 1);
            assert!(b[d - 1].iter().all(|m| h.is_normal(m)));
        }
    }

    #[test]
    fn abelian_counts() {
        let a = env(MetabelianLieAlgebra::abelian(3).unwrap());
        let b = basis_up_to(&a, 5).unwrap();
        for d in 1..=5 {
            assert_eq!(b[d - 1].len() as u128, ((d + 1) * (d + 2) / 2) as u128);
            assert_eq!(basis_count(&a, d).unwrap(), b[d - 1].len() as u128);
        }
    }

    #[test]
    fn growth_slopes() {
        let cases = [
            (MetabelianLieAlgebra::heisenberg(), 2.0),
            (MetabelianLieAlgebra::abelian(3).unwrap(), 3.0),
            (MetabelianLieAlgebra::abelian(1).unwrap(), 1.0),
        ];
        for (alg, expected) in cases {
            let r = gk_estimate(&env(alg), 12).unwrap();
            assert!((r.slope - expected).abs() < 0.25, "{} vs {expected}", r.slope);
        }
        assert!(gk_estimate(&env(MetabelianLieAlgebra::heisenberg()), 3).is_err());
    }
}
