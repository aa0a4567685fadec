use std::fmt;

use super::axioms::{self, Eval, JumpRule};
use super::ClassLabel;
use crate::lattice::{DMatrix, LatticeFn, LatticeSet, Point};

/// A concrete violation of a class axiom. Coordinate indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A point of the bounding box missing from the set or domain.
    NotBox { missing: Point },
    /// `f(x+e_i+e_j) + f(x) ≠ f(x+e_i) + f(x+e_j)`.
    NonModular { x: Point, i: usize, j: usize },
    /// `f(x−e_i) + f(x+e_i) < 2 f(x)`.
    AxisNonConvex { x: Point, i: usize },
    /// The local convex extension at `(x+y)/2` exceeds the average.
    HullMidpoint { x: Point, y: Point },
    /// Discrete midpoint convexity fails for the pair. For multimodular
    /// sets the pair lies in the set and fails after mapping by `D⁻¹`.
    RoundedMidpoint { x: Point, y: Point },
    /// Submodularity fails for the pair. For multimodular functions the
    /// points live in the `n+1`-dimensional lift.
    Lattice { x: Point, y: Point },
    /// `x` is in the domain but `x + 1` is not.
    NotShiftInvariant { x: Point },
    /// The exchange axiom fails at `(x, y, i)` with `i ∈ supp⁺(x−y)`.
    Exchange { x: Point, y: Point, i: usize },
    /// The jump exchange axiom fails for the `(x, y)`-increment `s`.
    Jump { x: Point, y: Point, s: Point },
}

/// Membership verdict; a witness accompanies every negative answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn member() -> Self {
        Verdict {
            member: true,
            witness: None,
        }
    }

    pub fn violated(w: Witness) -> Self {
        Verdict {
            member: false,
            witness: Some(w),
        }
    }
}

impl Witness {
    /// Re-evaluates the axiom at this tuple against a set; `true` means the
    /// violation is genuine.
    pub fn replay_set(&self, label: ClassLabel, s: &LatticeSet) -> bool {
        if label == ClassLabel::MultimodularSet {
            if let Witness::RoundedMidpoint { x, y } = self {
                let d = DMatrix::new(s.dim());
                let eval = |p: &Point| axioms::zero_if_member(s.contains(&d.apply(p)));
                return s.contains(x)
                    && s.contains(y)
                    && !axioms::rounded_midpoint(&eval, &d.apply_inverse(x), &d.apply_inverse(y));
            }
            return false;
        }
        if label == ClassLabel::IntegerBox {
            if let Witness::NotBox { missing } = self {
                return !s.contains(missing) && s.bounding_box().contains(missing);
            }
            return false;
        }
        let eval = |p: &Point| axioms::zero_if_member(s.contains(p));
        let rule = match label {
            ClassLabel::JumpSystem => JumpRule::TwoStep,
            ClassLabel::ConstParityJump => JumpRule::Exchange,
            ClassLabel::SimultExchJump => JumpRule::NatExchange,
            _ => return self.replay_values(label, &eval, &s.indicator()),
        };
        match self {
            Witness::Jump { x, y, s: step } => {
                s.contains(x)
                    && s.contains(y)
                    && axioms::increments(x, y).contains(step)
                    && !axioms::jump(&eval, x, y, step, rule)
            }
            _ => false,
        }
    }

    /// Re-evaluates the axiom at this tuple against a function.
    pub fn replay_fn(&self, label: ClassLabel, f: &LatticeFn) -> bool {
        let eval = |p: &Point| f.value(p);
        self.replay_values(label, &eval, f)
    }

    fn replay_values(&self, label: ClassLabel, eval: Eval, f: &LatticeFn) -> bool {
        use ClassLabel::*;
        let fin = |p: &Point| eval(p).is_finite();
        match (label, self) {
            (SeparableConvex, Witness::NotBox { missing }) => {
                !fin(missing) && f.bounding_box().contains(missing)
            }
            (SeparableConvex, Witness::NonModular { x, i, j }) => {
                i != j && !axioms::modular(eval, x, *i, *j)
            }
            (SeparableConvex, Witness::AxisNonConvex { x, i }) => {
                !axioms::axis_convex(eval, x, *i)
            }
            (IntegrallyConvexSet | IntegrallyConvexFn, Witness::HullMidpoint { x, y }) => {
                fin(x) && fin(y) && !axioms::hull_midpoint(f, x, y)
            }
            (
                LNatSet | LNatFn | GlobalDmcSet | GlobalDmcFn | LocalDmcFn,
                Witness::RoundedMidpoint { x, y },
            ) => {
                let dist = x.linf_distance(y);
                let in_scope = match label {
                    GlobalDmcSet | GlobalDmcFn => dist >= 2,
                    LocalDmcFn => {
                        dist == 2 || (dist > 2 && !midpoints_in(eval, x, y))
                    }
                    _ => true,
                };
                in_scope && fin(x) && fin(y) && !axioms::rounded_midpoint(eval, x, y)
            }
            (LSet | LFn, Witness::NotShiftInvariant { x }) => {
                fin(x) && !fin(&x.shifted_all(1))
            }
            (LSet | LFn, Witness::Lattice { x, y }) => {
                fin(x) && fin(y) && !axioms::lattice(eval, x, y)
            }
            (MultimodularFn, Witness::Lattice { x, y }) => {
                let lift = |p: &Point| axioms::multimodular_lift_value(f, p);
                x.dim() == f.dim() + 1
                    && lift(x).is_finite()
                    && lift(y).is_finite()
                    && !axioms::lattice(&lift, x, y)
            }
            (MNatSet | MNatFn | MSet | MFn, Witness::Exchange { x, y, i }) => {
                let allow_zero = matches!(label, MNatSet | MNatFn);
                fin(x) && fin(y) && x[*i] > y[*i] && !axioms::exchange(eval, x, y, *i, allow_zero)
            }
            (JumpMFn | JumpMNatFn, Witness::Jump { x, y, s }) => {
                let rule = if label == JumpMFn {
                    JumpRule::Exchange
                } else {
                    JumpRule::NatExchange
                };
                fin(x)
                    && fin(y)
                    && axioms::increments(x, y).contains(s)
                    && !axioms::jump(eval, x, y, s, rule)
            }
            _ => false,
        }
    }
}

fn midpoints_in(eval: Eval, x: &Point, y: &Point) -> bool {
    let (up, down) = crate::lattice::midpoint_round(x, y).expect("same dimension");
    eval(&up).is_finite() && eval(&down).is_finite()
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotBox { missing } => write!(f, "bounding box point {missing} is missing"),
            Witness::NonModular { x, i, j } => {
                write!(f, "not modular on the unit square at {x} in directions {i},{j}")
            }
            Witness::AxisNonConvex { x, i } => write!(f, "not convex along axis {i} at {x}"),
            Witness::HullMidpoint { x, y } => {
                write!(f, "local extension at the midpoint of {x} and {y} exceeds the average")
            }
            Witness::RoundedMidpoint { x, y } => {
                write!(f, "discrete midpoint convexity fails for x={x}, y={y}")
            }
            Witness::Lattice { x, y } => write!(f, "submodularity fails for x={x}, y={y}"),
            Witness::NotShiftInvariant { x } => write!(f, "{x} is in the domain, {x}+1 is not"),
            Witness::Exchange { x, y, i } => write!(f, "exchange fails for x={x}, y={y}, i={i}"),
            Witness::Jump { x, y, s } => write!(f, "jump exchange fails for x={x}, y={y}, s={s}"),
        }
    }
}

/// The lattice points a witness names.
pub fn witness_points(w: &Witness) -> Vec<Point> {
    match w {
        Witness::NotBox { missing } => vec![missing.clone()],
        Witness::NonModular { x, .. }
        | Witness::AxisNonConvex { x, .. }
        | Witness::NotShiftInvariant { x } => vec![x.clone()],
        Witness::HullMidpoint { x, y }
        | Witness::RoundedMidpoint { x, y }
        | Witness::Lattice { x, y }
        | Witness::Exchange { x, y, .. }
        | Witness::Jump { x, y, .. } => vec![x.clone(), y.clone()],
    }
}
