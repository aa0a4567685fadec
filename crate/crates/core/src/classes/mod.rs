//! Membership recognizers for the discrete convexity classes, minimizer
//! sets of linearly perturbed functions, and the interval-sum description
//! of multimodular sets.

mod axioms;
mod label;
mod recognize;
mod witness;

pub use label::ClassLabel;
pub use recognize::{check_fn, check_set};
pub use witness::{witness_points, Verdict, Witness};

use crate::error::{Error, Result};
use crate::lattice::{LatticeFn, LatticeSet, Point, Rational, Window};

/// `argmin f[−c]` where `f[−c](x) = f(x) − Σ c_i x_i`.
///
/// For a lifted function `f[−c]` changes by `ramp − Σ c_i` along `1`, so
/// the minimum exists only when the two agree.
pub fn argmin_perturbed(f: &LatticeFn, c: &[Rational]) -> Result<LatticeSet> {
    if c.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: c.len(),
        });
    }
    if f.is_lifted() {
        let total: Rational = c.iter().sum();
        if total != f.ramp() {
            return Err(Error::Unbounded(format!(
                "f[-c] has slope {} along the all-ones direction",
                f.ramp() - total
            )));
        }
    }
    let perturbed: Vec<(&Point, Rational)> = f.entries().map(|(p, v)| (p, v - p.dot(c))).collect();
    let best = perturbed
        .iter()
        .map(|(_, v)| *v)
        .min()
        .expect("nonempty domain");
    let minimizers = perturbed
        .into_iter()
        .filter(|(_, v)| *v == best)
        .map(|(p, _)| p.clone());
    if f.is_lifted() {
        LatticeSet::lifted(f.dim(), minimizers)
    } else {
        LatticeSet::new(f.dim(), minimizers)
    }
}

/// Bounds `a_I ≤ x(I) ≤ b_I` over consecutive intervals `I = [k, l]`,
/// fitted to `s`, and whether the lattice points of `w` satisfying them
/// are exactly `s`. This holds for every multimodular `s ⊆ w`.
pub fn multimodular_polyhedral_check(s: &LatticeSet, w: &Window) -> Result<bool> {
    if s.is_lifted() {
        return Err(Error::LiftedInput("multimodular_polyhedral_check"));
    }
    if w.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: w.dim(),
        });
    }
    if let Some(p) = s.iter().find(|p| !w.contains(p)) {
        return Err(Error::InvalidWindow(format!("{p} lies outside the window")));
    }
    let n = s.dim();
    let intervals: Vec<Vec<usize>> = (0..n)
        .flat_map(|k| (k..n).map(move |l| (k..=l).collect()))
        .collect();
    let bounds: Vec<(i64, i64)> = intervals
        .iter()
        .map(|iv| {
            let sums: Vec<i64> = s.iter().map(|p| p.sum_over(iv)).collect();
            let lo = *sums.iter().min().expect("nonempty");
            let hi = *sums.iter().max().expect("nonempty");
            (lo, hi)
        })
        .collect();
    let described = w.points().filter(|x| {
        intervals
            .iter()
            .zip(&bounds)
            .all(|(iv, &(lo, hi))| (lo..=hi).contains(&x.sum_over(iv)))
    });
    let mut count = 0usize;
    for x in described {
        if !s.contains(&x) {
            return Ok(false);
        }
        count += 1;
    }
    Ok(count == s.len())
}
