//! Direct sum, splitting and aggregation of sets and functions, with the
//! Minkowski sum and infimal convolution obtained from them.
//!
//! Coordinate indices are 0-based.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{LatticeFn, LatticeSet, Point, Rational, Window};

/// Splitting pattern: coordinate `i` is replaced by a block of
/// `blocks[i]` consecutive coordinates whose sum recovers it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    blocks: Vec<usize>,
}

impl SplitSpec {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidSpec(
                "split blocks must be a nonempty list of positive sizes".into(),
            ));
        }
        Ok(SplitSpec { blocks })
    }

    /// Splits coordinate `i` of `Z^n` into two.
    pub fn elementary(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidSpec(format!("coordinate {i} out of range for n={n}")));
        }
        let mut blocks = vec![1; n];
        blocks[i] = 2;
        SplitSpec::new(blocks)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Input dimension n.
    pub fn source_dim(&self) -> usize {
        self.blocks.len()
    }

    /// Output dimension m = Σ m_i.
    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Block sums `(y(U_1), …, y(U_n))`.
    pub fn collapse(&self, y: &Point) -> Point {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut k = 0;
        for &b in &self.blocks {
            out.push(y.coords()[k..k + b].iter().sum());
            k += b;
        }
        Point::new(out)
    }

    /// Window of block sums reachable from `w`.
    pub fn collapse_window(&self, w: &Window) -> Window {
        Window::new(self.collapse(w.lo()), self.collapse(w.hi())).expect("lo ≤ hi is preserved")
    }
}

/// Partition of the coordinates `{0, …, n−1}` into groups; group `j`
/// becomes output coordinate `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    groups: Vec<Vec<usize>>,
    n: usize,
}

impl PartitionSpec {
    pub fn new(groups: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = groups.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for g in &groups {
            if g.is_empty() {
                return Err(Error::InvalidSpec("partition groups must be nonempty".into()));
            }
            for &i in g {
                if i >= n || seen[i] {
                    return Err(Error::InvalidSpec(format!(
                        "groups do not partition 0..{n}: index {i} is out of range or repeated"
                    )));
                }
                seen[i] = true;
            }
        }
        if groups.is_empty() {
            return Err(Error::InvalidSpec("a partition needs at least one group".into()));
        }
        Ok(PartitionSpec { groups, n })
    }

    /// Merges coordinates `i < j` of `Z^n` into the position of `i`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= j || j >= n {
            return Err(Error::InvalidSpec(format!("need i < j < n, got i={i}, j={j}, n={n}")));
        }
        let groups = (0..n)
            .filter(|&k| k != j)
            .map(|k| if k == i { vec![i, j] } else { vec![k] })
            .collect();
        PartitionSpec::new(groups)
    }

    /// The pairing `{i, n+i}` of a direct sum of two objects in `Z^n`.
    pub fn pairing(n: usize) -> Self {
        PartitionSpec::new((0..n).map(|i| vec![i, n + i]).collect()).expect("valid pairing")
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn source_dim(&self) -> usize {
        self.n
    }

    pub fn target_dim(&self) -> usize {
        self.groups.len()
    }

    /// `(x(N_1), …, x(N_m))`.
    pub fn aggregate(&self, x: &Point) -> Point {
        Point::new(self.groups.iter().map(|g| x.sum_over(g)).collect())
    }
}

fn reject_lifted(lifted: bool, op: &'static str) -> Result<()> {
    if lifted {
        Err(Error::LiftedInput(op))
    } else {
        Ok(())
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `S₁ ⊕ S₂ = {(x, y) : x ∈ S₁, y ∈ S₂}`, coordinates concatenated.
pub fn direct_sum_set(s1: &LatticeSet, s2: &LatticeSet) -> Result<LatticeSet> {
    reject_lifted(s1.is_lifted() || s2.is_lifted(), "direct_sum_set")?;
    LatticeSet::new(
        s1.dim() + s2.dim(),
        s1.iter().flat_map(|x| s2.iter().map(move |y| x.concat(y))),
    )
}

/// `(f₁ ⊕ f₂)(x, y) = f₁(x) + f₂(y)`.
pub fn direct_sum_fn(f1: &LatticeFn, f2: &LatticeFn) -> Result<LatticeFn> {
    reject_lifted(f1.is_lifted() || f2.is_lifted(), "direct_sum_fn")?;
    LatticeFn::new(
        f1.dim() + f2.dim(),
        f1.entries()
            .flat_map(|(x, a)| f2.entries().map(move |(y, b)| (x.concat(y), a + b))),
    )
}

/// Points `y` of `w` whose block sums lie in `s`.
pub fn split_set(s: &LatticeSet, spec: &SplitSpec, w: &Window) -> Result<LatticeSet> {
    reject_lifted(s.is_lifted(), "split_set")?;
    check_dim(spec.source_dim(), s.dim())?;
    check_dim(spec.total(), w.dim())?;
    let pts: Vec<Point> = w.points().filter(|y| s.contains(&spec.collapse(y))).collect();
    if pts.is_empty() {
        return Err(Error::Empty("no split point lies in the window".into()));
    }
    LatticeSet::new(spec.total(), pts)
}

/// `g(y) = f(y(U_1), …, y(U_n))` on the points of `w`.
pub fn split_fn(f: &LatticeFn, spec: &SplitSpec, w: &Window) -> Result<LatticeFn> {
    reject_lifted(f.is_lifted(), "split_fn")?;
    check_dim(spec.source_dim(), f.dim())?;
    check_dim(spec.total(), w.dim())?;
    let entries: Vec<(Point, Rational)> = w
        .points()
        .filter_map(|y| {
            let v = f.value(&spec.collapse(&y)).finite()?;
            Some((y, v))
        })
        .collect();
    if entries.is_empty() {
        return Err(Error::Empty("no split point lies in the window".into()));
    }
    LatticeFn::new(spec.total(), entries)
}

/// Image of `s` under the group sums.
pub fn aggregate_set(s: &LatticeSet, spec: &PartitionSpec) -> Result<LatticeSet> {
    reject_lifted(s.is_lifted(), "aggregate_set")?;
    check_dim(spec.source_dim(), s.dim())?;
    LatticeSet::new(spec.target_dim(), s.iter().map(|x| spec.aggregate(x)))
}

/// `g(y) = min{ f(x) : x(N_j) = y_j }`.
pub fn aggregate_fn(f: &LatticeFn, spec: &PartitionSpec) -> Result<LatticeFn> {
    reject_lifted(f.is_lifted(), "aggregate_fn")?;
    check_dim(spec.source_dim(), f.dim())?;
    let mut best: BTreeMap<Point, Rational> = BTreeMap::new();
    for (x, v) in f.entries() {
        best.entry(spec.aggregate(x))
            .and_modify(|b| {
                if *v < *b {
                    *b = *v
                }
            })
            .or_insert(*v);
    }
    LatticeFn::new(spec.target_dim(), best)
}

/// `S₁ + S₂`, by pairwise sums.
pub fn minkowski_sum_set(s1: &LatticeSet, s2: &LatticeSet) -> Result<LatticeSet> {
    reject_lifted(s1.is_lifted() || s2.is_lifted(), "minkowski_sum_set")?;
    check_dim(s1.dim(), s2.dim())?;
    LatticeSet::new(s1.dim(), s1.iter().flat_map(|x| s2.iter().map(move |y| x + y)))
}

/// `S₁ + S₂` as the aggregation of `S₁ ⊕ S₂` by the pairing `{i, n+i}`.
pub fn minkowski_sum_via_aggregation(s1: &LatticeSet, s2: &LatticeSet) -> Result<LatticeSet> {
    check_dim(s1.dim(), s2.dim())?;
    aggregate_set(&direct_sum_set(s1, s2)?, &PartitionSpec::pairing(s1.dim()))
}

/// `(f₁ □ f₂)(x) = min{ f₁(y) + f₂(z) : x = y + z }`.
pub fn convolution_fn(f1: &LatticeFn, f2: &LatticeFn) -> Result<LatticeFn> {
    reject_lifted(f1.is_lifted() || f2.is_lifted(), "convolution_fn")?;
    check_dim(f1.dim(), f2.dim())?;
    let mut best: BTreeMap<Point, Rational> = BTreeMap::new();
    for (y, a) in f1.entries() {
        for (z, b) in f2.entries() {
            let v = a + b;
            best.entry(y + z)
                .and_modify(|cur| {
                    if v < *cur {
                        *cur = v
                    }
                })
                .or_insert(v);
        }
    }
    LatticeFn::new(f1.dim(), best)
}

/// Convolution as the aggregation of `f₁ ⊕ f₂` by the pairing `{i, n+i}`.
pub fn convolution_via_aggregation(f1: &LatticeFn, f2: &LatticeFn) -> Result<LatticeFn> {
    check_dim(f1.dim(), f2.dim())?;
    aggregate_fn(&direct_sum_fn(f1, f2)?, &PartitionSpec::pairing(f1.dim()))
}
