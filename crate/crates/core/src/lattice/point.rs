use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};

/// An integer vector in Z^n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn ones(dim: usize) -> Self {
        Point(vec![1; dim])
    }

    /// The `i`-th unit vector (0-based), scaled by `sign`.
    pub fn unit(dim: usize, i: usize, sign: i64) -> Self {
        let mut v = vec![0; dim];
        v[i] = sign;
        Point(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// Component sum x(N).
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Component sum over the given (0-based) indices.
    pub fn sum_over(&self, indices: &[usize]) -> i64 {
        indices.iter().map(|&i| self.0[i]).sum()
    }

    pub fn linf_distance(&self, other: &Point) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }

    pub fn dot(&self, c: &[crate::Rational]) -> crate::Rational {
        self.0
            .iter()
            .zip(c)
            .map(|(&x, ci)| ci * x)
            .fold(crate::Rational::from_integer(0), |acc, t| acc + t)
    }

    /// Returns `self + a * e_i`.
    pub fn shifted(&self, i: usize, a: i64) -> Point {
        let mut v = self.0.clone();
        v[i] += a;
        Point(v)
    }

    /// Returns `self + a * 1`.
    pub fn shifted_all(&self, a: i64) -> Point {
        Point(self.0.iter().map(|x| x + a).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Point) -> Point {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Point(v)
    }

    /// Representative along the all-ones direction: subtracts `x_n * 1`
    /// so the last coordinate becomes zero. Returns the representative and
    /// the subtracted multiple.
    pub fn normalize_lift(&self) -> (Point, i64) {
        let last = *self.0.last().expect("points have dimension >= 1");
        (self.shifted_all(-last), last)
    }

    pub fn le(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point(v.to_vec())
    }
}

impl Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positive and negative supports, as 0-based index lists.
pub fn supports(p: &Point) -> (Vec<usize>, Vec<usize>) {
    let plus = (0..p.dim()).filter(|&i| p[i] > 0).collect();
    let minus = (0..p.dim()).filter(|&i| p[i] < 0).collect();
    (plus, minus)
}

/// Componentwise round-up and round-down of `(x + y) / 2`.
pub fn midpoint_round(x: &Point, y: &Point) -> Result<(Point, Point)> {
    y.check_dim(x.dim())?;
    let mut up = Vec::with_capacity(x.dim());
    let mut down = Vec::with_capacity(x.dim());
    for (a, b) in x.0.iter().zip(&y.0) {
        let s = a + b;
        up.push(s.div_euclid(2) + s.rem_euclid(2));
        down.push(s.div_euclid(2));
    }
    Ok((Point(up), Point(down)))
}

/// Componentwise maximum and minimum.
pub fn join_meet(x: &Point, y: &Point) -> Result<(Point, Point)> {
    y.check_dim(x.dim())?;
    let join = x.0.iter().zip(&y.0).map(|(a, b)| *a.max(b)).collect();
    let meet = x.0.iter().zip(&y.0).map(|(a, b)| *a.min(b)).collect();
    Ok((Point(join), Point(meet)))
}
