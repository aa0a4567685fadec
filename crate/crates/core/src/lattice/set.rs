use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{int, LatticeFn, Point, Window};

/// A nonempty finite subset of Z^n, or, when `lift_ones` is set, the
/// union of lines `{p + α·1 : α ∈ Z}` through finitely many
/// representatives stored with last coordinate zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeSet {
    dim: usize,
    points: BTreeSet<Point>,
    lift_ones: bool,
}

impl LatticeSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points = collect_checked(dim, points)?;
        Ok(LatticeSet {
            dim,
            points,
            lift_ones: false,
        })
    }

    /// The set `{p + α·1}` generated by the given points; representatives
    /// are normalized so their last coordinate is zero.
    pub fn lifted(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points = collect_checked(dim, points)?
            .into_iter()
            .map(|p| p.normalize_lift().0)
            .collect();
        Ok(LatticeSet {
            dim,
            points,
            lift_ones: true,
        })
    }

    pub fn singleton(p: Point) -> Self {
        let dim = p.dim();
        LatticeSet {
            dim,
            points: BTreeSet::from([p]),
            lift_ones: false,
        }
    }

    /// All lattice points of a window (an integer box).
    pub fn from_window(w: &Window) -> Self {
        LatticeSet {
            dim: w.dim(),
            points: w.points().collect(),
            lift_ones: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored points (representatives, for lifted sets).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_lifted(&self) -> bool {
        self.lift_ones
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> + '_ {
        self.points.iter()
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn contains(&self, p: &Point) -> bool {
        if p.dim() != self.dim {
            return false;
        }
        if self.lift_ones {
            self.points.contains(&p.normalize_lift().0)
        } else {
            self.points.contains(p)
        }
    }

    /// Indicator function: zero on the set, +∞ elsewhere.
    pub fn indicator(&self) -> LatticeFn {
        let entries = self.points.iter().map(|p| (p.clone(), int(0)));
        if self.lift_ones {
            LatticeFn::lifted(self.dim, entries, int(0)).expect("indicator of a valid set")
        } else {
            LatticeFn::new(self.dim, entries).expect("indicator of a valid set")
        }
    }

    /// Intersection with a window. Lifted sets are materialized first.
    /// An empty intersection is an error.
    pub fn restrict_to_window(&self, w: &Window) -> Result<LatticeSet> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.dim(),
            });
        }
        let points: BTreeSet<Point> = if self.lift_ones {
            self.points
                .iter()
                .flat_map(|p| lift_range(p, w).map(move |a| p.shifted_all(a)))
                .collect()
        } else {
            self.points.iter().filter(|p| w.contains(p)).cloned().collect()
        };
        if points.is_empty() {
            return Err(Error::Empty(format!("set does not meet window [{}, {}]", w.lo(), w.hi())));
        }
        Ok(LatticeSet {
            dim: self.dim,
            points,
            lift_ones: false,
        })
    }

    /// Image under a coordinate map; used by the D-transforms.
    pub(crate) fn map_points(&self, f: impl Fn(&Point) -> Point) -> LatticeSet {
        LatticeSet {
            dim: self.dim,
            points: self.points.iter().map(f).collect(),
            lift_ones: false,
        }
    }

    /// Smallest box containing the stored points.
    pub fn bounding_box(&self) -> Window {
        Window::hull(self.points.iter(), 0).expect("sets are nonempty")
    }
}

/// Range of α with `p + α·1` inside `w`.
pub(crate) fn lift_range(p: &Point, w: &Window) -> std::ops::RangeInclusive<i64> {
    let lo = (0..p.dim()).map(|i| w.lo()[i] - p[i]).max().unwrap_or(0);
    let hi = (0..p.dim()).map(|i| w.hi()[i] - p[i]).min().unwrap_or(0);
    lo..=hi
}

fn collect_checked(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<BTreeSet<Point>> {
    if dim == 0 {
        return Err(Error::InvalidSpec("dimension must be at least 1".into()));
    }
    let mut out = BTreeSet::new();
    for p in points {
        p.check_dim(dim)?;
        out.insert(p);
    }
    if out.is_empty() {
        return Err(Error::Empty("a lattice set must be nonempty".into()));
    }
    Ok(out)
}

impl fmt::Display for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.points.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")?;
        if self.lift_ones {
            write!(f, " + Z·1")?;
        }
        Ok(())
    }
}
