use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::set::lift_range;
use crate::lattice::{int, LatticeSet, Point, Rational, Value, Window};

/// A function Z^n → Q ∪ {+∞} with nonempty finite effective domain, or,
/// when `lift_ones` is set, the function determined by its values on
/// representatives with last coordinate zero and `f(x + 1) = f(x) + ramp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeFn {
    dim: usize,
    values: BTreeMap<Point, Rational>,
    lift_ones: bool,
    ramp: Rational,
}

impl LatticeFn {
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (Point, Rational)>) -> Result<Self> {
        let values = collect_entries(dim, entries.into_iter())?;
        Ok(LatticeFn {
            dim,
            values,
            lift_ones: false,
            ramp: int(0),
        })
    }

    /// A lifted function with the given ramp. Entries off the
    /// normalization hyperplane are moved onto it; inconsistent entries
    /// are rejected.
    pub fn lifted(
        dim: usize,
        entries: impl IntoIterator<Item = (Point, Rational)>,
        ramp: Rational,
    ) -> Result<Self> {
        let normalized = entries.into_iter().map(|(p, v)| {
            let (rep, k) = p.normalize_lift();
            (rep, v - ramp * k)
        });
        let values = collect_entries(dim, normalized)?;
        Ok(LatticeFn {
            dim,
            values,
            lift_ones: true,
            ramp,
        })
    }

    /// Tabulates `f` over the points of a set (non-lifted).
    pub fn from_fn(domain: &LatticeSet, f: impl Fn(&Point) -> Rational) -> Result<Self> {
        if domain.is_lifted() {
            return Err(Error::LiftedInput("LatticeFn::from_fn"));
        }
        LatticeFn::new(domain.dim(), domain.iter().map(|p| (p.clone(), f(p))))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_lifted(&self) -> bool {
        self.lift_ones
    }

    pub fn ramp(&self) -> Rational {
        self.ramp
    }

    /// Stored entries (representatives, for lifted functions).
    pub fn entries(&self) -> impl Iterator<Item = (&Point, &Rational)> + '_ {
        self.values.iter()
    }

    pub fn values(&self) -> &BTreeMap<Point, Rational> {
        &self.values
    }

    pub fn value(&self, p: &Point) -> Value {
        if p.dim() != self.dim {
            return Value::Infinite;
        }
        if self.lift_ones {
            let (rep, k) = p.normalize_lift();
            self.values
                .get(&rep)
                .map_or(Value::Infinite, |v| Value::Finite(v + self.ramp * k))
        } else {
            self.values.get(p).copied().into()
        }
    }

    pub fn in_domain(&self, p: &Point) -> bool {
        self.value(p).is_finite()
    }

    /// Effective domain, lifted when the function is.
    pub fn domain(&self) -> LatticeSet {
        let pts = self.values.keys().cloned();
        if self.lift_ones {
            LatticeSet::lifted(self.dim, pts).expect("domain is nonempty")
        } else {
            LatticeSet::new(self.dim, pts).expect("domain is nonempty")
        }
    }

    pub fn is_indicator(&self) -> bool {
        self.ramp == int(0) && self.values.values().all(|v| *v == int(0))
    }

    /// Restriction to a window; lifted functions are materialized first.
    pub fn restrict_to_window(&self, w: &Window) -> Result<LatticeFn> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.dim(),
            });
        }
        let values: BTreeMap<Point, Rational> = if self.lift_ones {
            self.values
                .iter()
                .flat_map(|(p, v)| {
                    lift_range(p, w).map(move |a| (p.shifted_all(a), v + self.ramp * a))
                })
                .collect()
        } else {
            self.values
                .iter()
                .filter(|(p, _)| w.contains(p))
                .map(|(p, v)| (p.clone(), *v))
                .collect()
        };
        if values.is_empty() {
            return Err(Error::Empty(format!(
                "effective domain does not meet window [{}, {}]",
                w.lo(),
                w.hi()
            )));
        }
        Ok(LatticeFn {
            dim: self.dim,
            values,
            lift_ones: false,
            ramp: int(0),
        })
    }

    pub(crate) fn map_points(&self, f: impl Fn(&Point) -> Point) -> LatticeFn {
        LatticeFn {
            dim: self.dim,
            values: self.values.iter().map(|(p, v)| (f(p), *v)).collect(),
            lift_ones: false,
            ramp: int(0),
        }
    }

    /// Smallest box containing the stored points.
    pub fn bounding_box(&self) -> Window {
        Window::hull(self.values.keys(), 0).expect("functions have nonempty domain")
    }
}

fn collect_entries(
    dim: usize,
    entries: impl Iterator<Item = (Point, Rational)>,
) -> Result<BTreeMap<Point, Rational>> {
    if dim == 0 {
        return Err(Error::InvalidSpec("dimension must be at least 1".into()));
    }
    let mut out = BTreeMap::new();
    for (p, v) in entries {
        p.check_dim(dim)?;
        if let Some(prev) = out.insert(p.clone(), v) {
            if prev != v {
                return Err(Error::InconsistentLift(p.to_string()));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Empty("effective domain must be nonempty".into()));
    }
    Ok(out)
}

impl fmt::Display for LatticeFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (p, v)) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p} ↦ {v}")?;
        }
        write!(f, "}}")?;
        if self.lift_ones {
            write!(f, " lifted, ramp {}", self.ramp)?;
        }
        Ok(())
    }
}
