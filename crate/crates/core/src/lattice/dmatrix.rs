//! The bidiagonal change of variables relating multimodular and
//! L♮-convex objects.
//!
//! `D` has ones on the diagonal and `-1` just below it; `D⁻¹` is the
//! lower-triangular all-ones matrix. `D·p` takes successive differences
//! and `D⁻¹·x` takes prefix sums.

use crate::error::{Error, Result};
use crate::lattice::{LatticeFn, LatticeSet, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DMatrix {
    dim: usize,
}

impl DMatrix {
    pub fn new(dim: usize) -> Self {
        DMatrix { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)` of `D` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            1
        } else if i == j + 1 {
            -1
        } else {
            0
        }
    }

    /// Entry `(i, j)` of `D⁻¹` (0-based).
    pub fn inverse_entry(&self, i: usize, j: usize) -> i64 {
        i64::from(i >= j)
    }

    /// `D·p = (p₁, p₂ − p₁, …, p_n − p_{n−1})`.
    pub fn apply(&self, p: &Point) -> Point {
        let c = p.coords();
        Point::new(
            (0..c.len())
                .map(|i| if i == 0 { c[0] } else { c[i] - c[i - 1] })
                .collect(),
        )
    }

    /// `D⁻¹·x = (x₁, x₁ + x₂, …, x₁ + ⋯ + x_n)`.
    pub fn apply_inverse(&self, x: &Point) -> Point {
        let mut acc = 0;
        Point::new(
            x.coords()
                .iter()
                .map(|v| {
                    acc += v;
                    acc
                })
                .collect(),
        )
    }
}

/// Objects that can be pulled back through `x = D·p`.
pub trait DTransform: Sized {
    /// Pulls back through `x = D·p`: domain points are mapped by `D⁻¹`, so
    /// a multimodular input yields an L♮-convex output.
    fn d_transform(&self) -> Result<Self>;
    /// Inverse of [`DTransform::d_transform`]: domain points mapped by `D`.
    fn d_inverse_transform(&self) -> Result<Self>;
}

impl DTransform for LatticeSet {
    fn d_transform(&self) -> Result<Self> {
        if self.is_lifted() {
            return Err(Error::LiftedInput("d_transform"));
        }
        let d = DMatrix::new(self.dim());
        Ok(self.map_points(|x| d.apply_inverse(x)))
    }

    fn d_inverse_transform(&self) -> Result<Self> {
        if self.is_lifted() {
            return Err(Error::LiftedInput("d_inverse_transform"));
        }
        let d = DMatrix::new(self.dim());
        Ok(self.map_points(|p| d.apply(p)))
    }
}

impl DTransform for LatticeFn {
    fn d_transform(&self) -> Result<Self> {
        if self.is_lifted() {
            return Err(Error::LiftedInput("d_transform"));
        }
        let d = DMatrix::new(self.dim());
        Ok(self.map_points(|x| d.apply_inverse(x)))
    }

    fn d_inverse_transform(&self) -> Result<Self> {
        if self.is_lifted() {
            return Err(Error::LiftedInput("d_inverse_transform"));
        }
        let d = DMatrix::new(self.dim());
        Ok(self.map_points(|p| d.apply(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;
    use proptest::prelude::*;

    fn set(dim: usize, v: &[&[i64]]) -> LatticeSet {
        LatticeSet::new(dim, v.iter().map(|p| Point::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn matrix_times_inverse_is_identity() {
        for n in 1..7 {
            let d = DMatrix::new(n);
            for i in 0..n {
                for j in 0..n {
                    let s: i64 = (0..n).map(|k| d.entry(i, k) * d.inverse_entry(k, j)).sum();
                    assert_eq!(s, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn pulls_multimodular_set_back_to_lnat_set() {
        let s_tilde = set(
            6,
            &[
                &[0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[1, 0, -1, 0, 0, 0],
                &[1, 0, -1, 0, 1, 0],
            ],
        );
        let s = set(
            6,
            &[
                &[0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 1],
                &[1, 1, 0, 0, 0, 0],
                &[1, 1, 0, 0, 1, 1],
            ],
        );
        assert_eq!(s_tilde.d_transform().unwrap(), s);
        assert_eq!(s.d_inverse_transform().unwrap(), s_tilde);
    }

    #[test]
    fn small_transforms() {
        let zero = LatticeSet::singleton(Point::zeros(4));
        assert_eq!(zero.d_transform().unwrap(), zero);
        assert_eq!(DMatrix::new(2).apply_inverse(&Point::from([1, 1])), Point::from([1, 2]));
        assert_eq!(DMatrix::new(3).apply(&Point::from([1, 2, 3])), Point::from([1, 1, 1]));
        let t = set(3, &[&[0, 0, 0], &[0, 1, 1], &[1, 1, 0], &[1, 2, 1]]);
        let t_tilde = set(3, &[&[0, 0, 0], &[0, 1, 0], &[1, 0, -1], &[1, 1, -1]]);
        assert_eq!(t.d_inverse_transform().unwrap(), t_tilde);
    }

    #[test]
    fn lifted_input_rejected() {
        let s = LatticeSet::lifted(2, [Point::from([0, 0])]).unwrap();
        assert!(s.d_transform().is_err());
        assert!(s.d_inverse_transform().is_err());
        assert!(s.indicator().d_transform().is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_is_identity(n in 1usize..5, raw in prop::collection::vec(prop::collection::vec(-4i64..4, 4), 1..12)) {
            let s = LatticeSet::new(n, raw.iter().map(|v| Point::new(v[..n].to_vec()))).unwrap();
            prop_assert_eq!(&s.d_transform().unwrap().d_inverse_transform().unwrap(), &s);
            prop_assert_eq!(&s.d_inverse_transform().unwrap().d_transform().unwrap(), &s);
            let f = LatticeFn::from_fn(&s, |p| int(p.sum())).unwrap();
            prop_assert_eq!(&f.d_transform().unwrap().d_inverse_transform().unwrap(), &f);
        }
    }
}
