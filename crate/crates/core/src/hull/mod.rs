//! Local convex hulls and the local convex extension at half-integral
//! points, decided with an exact simplex.

pub mod simplex;

use std::fmt;

use crate::error::Result;
use crate::lattice::{int, BoxIter, LatticeFn, LatticeSet, Point, Rational, Value};
use simplex::{minimize, LpOutcome};

/// A point of (½Z)^n, stored as twice its coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfPoint {
    twice: Vec<i64>,
}

impl HalfPoint {
    /// `(x + y) / 2`.
    pub fn midpoint(x: &Point, y: &Point) -> Result<Self> {
        y.check_dim(x.dim())?;
        Ok(HalfPoint {
            twice: (x + y).into_coords(),
        })
    }

    /// Builds a half point from doubled coordinates.
    pub fn from_twice(twice: Vec<i64>) -> Self {
        HalfPoint { twice }
    }

    pub fn dim(&self) -> usize {
        self.twice.len()
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.twice.iter().map(|&t| Rational::new(t, 2)).collect()
    }

    /// The integer point, if every coordinate is integral.
    pub fn as_integer(&self) -> Option<Point> {
        self.twice
            .iter()
            .all(|t| t % 2 == 0)
            .then(|| Point::new(self.twice.iter().map(|t| t / 2).collect()))
    }

    pub fn floor(&self) -> Point {
        Point::new(self.twice.iter().map(|t| t.div_euclid(2)).collect())
    }

    pub fn ceil(&self) -> Point {
        Point::new(
            self.twice
                .iter()
                .map(|t| t.div_euclid(2) + t.rem_euclid(2))
                .collect(),
        )
    }

    /// Reflection of an integer point through this center: `2c − z`.
    pub fn reflect(&self, z: &Point) -> Point {
        Point::new(self.twice.iter().zip(z.coords()).map(|(t, v)| t - v).collect())
    }
}

impl fmt::Display for HalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Integer points within open unit distance of a center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralNeighborhood {
    pub center: HalfPoint,
    pub points: Vec<Point>,
}

/// The floor/ceiling box around `x`; it has `2^k` points where `k` counts
/// the half-integral coordinates.
pub fn neighborhood(x: &HalfPoint) -> IntegralNeighborhood {
    IntegralNeighborhood {
        center: x.clone(),
        points: BoxIter::new(x.floor().into_coords(), x.ceil().into_coords()).collect(),
    }
}

/// Whether `x` is a convex combination of `S ∩ N(x)`.
pub fn in_local_hull(s: &LatticeSet, x: &HalfPoint) -> bool {
    debug_assert!(!s.is_lifted());
    if let Some(p) = x.as_integer() {
        return s.contains(&p);
    }
    let cols: Vec<Point> = neighborhood(x)
        .points
        .into_iter()
        .filter(|z| s.contains(z))
        .collect();
    if cols.is_empty() {
        return false;
    }
    // Two antipodal members settle it without an LP.
    if cols.iter().any(|z| s.contains(&x.reflect(z))) {
        return true;
    }
    let costs = vec![int(0); cols.len()];
    combination_lp(&cols, x, &costs).is_feasible()
}

/// The local convex extension `f̃(x)`: the least `Σ λ_v f(v)` over convex
/// combinations of `N(x) ∩ dom f` equal to `x`, or +∞ if there is none.
pub fn local_extension_value(f: &LatticeFn, x: &HalfPoint) -> Value {
    debug_assert!(!f.is_lifted());
    if let Some(p) = x.as_integer() {
        return f.value(&p);
    }
    let mut cols = Vec::new();
    let mut costs = Vec::new();
    for z in neighborhood(x).points {
        if let Value::Finite(v) = f.value(&z) {
            cols.push(z);
            costs.push(v);
        }
    }
    if cols.is_empty() {
        return Value::Infinite;
    }
    match combination_lp(&cols, x, &costs) {
        LpOutcome::Optimal { value, .. } => Value::Finite(value),
        LpOutcome::Infeasible => Value::Infinite,
        LpOutcome::Unbounded => unreachable!("convex combinations are bounded"),
    }
}

/// Cheap upper bound on `f̃(x)` from antipodal pairs `z, 2x − z`.
pub(crate) fn antipodal_bound(f: &LatticeFn, x: &HalfPoint) -> Value {
    neighborhood(x)
        .points
        .iter()
        .filter_map(|z| {
            let a = f.value(z).finite()?;
            let b = f.value(&x.reflect(z)).finite()?;
            Some(Value::Finite((a + b) / 2))
        })
        .min()
        .unwrap_or(Value::Infinite)
}

fn combination_lp(cols: &[Point], x: &HalfPoint, costs: &[Rational]) -> LpOutcome {
    let n = x.dim();
    let target = x.coords();
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    for i in 0..n {
        // Rows where every column agrees with the target carry no information.
        if cols.iter().all(|z| Rational::from_integer(z[i]) == target[i]) {
            continue;
        }
        a.push(cols.iter().map(|z| int(z[i])).collect());
        b.push(target[i]);
    }
    a.push(vec![int(1); cols.len()]);
    b.push(int(1));
    minimize(&a, &b, costs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    fn set(dim: usize, v: &[&[i64]]) -> LatticeSet {
        LatticeSet::new(dim, v.iter().map(|p| Point::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let x = HalfPoint::from_twice(vec![1, 2, 1]);
        let nb = neighborhood(&x);
        assert_eq!(
            nb.points,
            vec![
                Point::from([0, 1, 0]),
                Point::from([0, 1, 1]),
                Point::from([1, 1, 0]),
                Point::from([1, 1, 1])
            ]
        );
        let p = HalfPoint::from_twice(vec![4, -2]);
        assert_eq!(neighborhood(&p).points, vec![Point::from([2, -1])]);
        assert_eq!(neighborhood(&HalfPoint::from_twice(vec![1, 1])).points.len(), 4);
    }

    #[test]
    fn neighborhood_of_negative_halves() {
        let nb = neighborhood(&HalfPoint::from_twice(vec![-1]));
        assert_eq!(nb.points, vec![Point::from([-1]), Point::from([0])]);
    }

    #[test]
    fn local_hull_examples() {
        let t = set(2, &[&[1, 0], &[0, 1], &[2, 1], &[1, 2]]);
        assert!(!in_local_hull(&t, &HalfPoint::from_twice(vec![2, 2])));
        assert!(in_local_hull(&t, &HalfPoint::from_twice(vec![4, 2])));
        let diag = set(2, &[&[0, 0], &[1, 1]]);
        assert!(in_local_hull(&diag, &HalfPoint::from_twice(vec![1, 1])));
    }

    #[test]
    fn local_hull_needs_lp_for_triangles() {
        // (1/2,1/2,1/2) from (1,0,0),(0,1,0),(0,0,1),(1,1,1): no antipodal pair
        // among three of them, yet (1,1,1)+(0,0,0) is absent too.
        let s = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]);
        assert!(in_local_hull(&s, &HalfPoint::from_twice(vec![1, 1, 1])));
        let s = set(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(!in_local_hull(&s, &HalfPoint::from_twice(vec![1, 1, 1])));
        // centroid-type combination: 1/3 each of (1,1,0),(1,0,1),(0,1,1) = (2/3,..)
        // is not half-integral, but (1,1/2,1/2) = avg of (1,1,0),(1,0,1).
        assert!(in_local_hull(&s, &HalfPoint::from_twice(vec![2, 1, 1])));
    }

    #[test]
    fn extension_examples() {
        // Example with values 0 on even points and 1 on odd points.
        let entries = [(0, 0), (0, 2), (2, 0), (2, 2), (1, 1), (1, 3), (3, 1), (3, 3)];
        let f = LatticeFn::new(
            2,
            entries
                .iter()
                .map(|&(a, b)| (Point::from([a, b]), int(i64::from(a % 2 == 1)))),
        )
        .unwrap();
        assert_eq!(
            local_extension_value(&f, &HalfPoint::from_twice(vec![1, 1])),
            Value::Finite(rat(1, 2))
        );
        assert_eq!(
            local_extension_value(&f, &HalfPoint::from_twice(vec![6, 2])),
            Value::from(1)
        );
        assert_eq!(
            local_extension_value(&f, &HalfPoint::from_twice(vec![1, 0])),
            Value::Infinite
        );
    }

    #[test]
    fn indicator_extension_matches_hull() {
        let s = set(2, &[&[1, 0], &[0, 1], &[2, 1], &[1, 2], &[0, 0]]);
        let f = s.indicator();
        for twice in BoxIter::new(vec![-1, -1], vec![5, 5]) {
            let x = HalfPoint::from_twice(twice.into_coords());
            let v = local_extension_value(&f, &x);
            assert!(v == Value::from(0) || v == Value::Infinite);
            assert_eq!(v == Value::from(0), in_local_hull(&s, &x));
        }
    }
}
