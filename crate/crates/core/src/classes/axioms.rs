//! Single-tuple forms of the defining axioms. Each predicate returns
//! `true` when the axiom holds at the given tuple; values are read through
//! an evaluation closure so that lifts and pullbacks need no
//! materialization.

use crate::hull::{local_extension_value, HalfPoint};
use crate::lattice::{holds_ge, int, join_meet, midpoint_round, LatticeFn, Point, Value};

pub(crate) type Eval<'a> = &'a dyn Fn(&Point) -> Value;

fn pair_value(f: Eval, a: &Point, b: &Point) -> Value {
    f(a) + f(b)
}

/// `f(x) + f(y) ≥ f(⌈(x+y)/2⌉) + f(⌊(x+y)/2⌋)`.
pub(crate) fn rounded_midpoint(f: Eval, x: &Point, y: &Point) -> bool {
    let (up, down) = midpoint_round(x, y).expect("same dimension");
    holds_ge(pair_value(f, x, y), pair_value(f, &up, &down))
}

/// `f(x) + f(y) ≥ f(x ∨ y) + f(x ∧ y)`.
pub(crate) fn lattice(f: Eval, x: &Point, y: &Point) -> bool {
    let (join, meet) = join_meet(x, y).expect("same dimension");
    holds_ge(pair_value(f, x, y), pair_value(f, &join, &meet))
}

/// `f̃((x+y)/2) ≤ (f(x) + f(y)) / 2` for a finite function.
pub(crate) fn hull_midpoint(f: &LatticeFn, x: &Point, y: &Point) -> bool {
    let m = HalfPoint::midpoint(x, y).expect("same dimension");
    let lhs = f.value(x) + f.value(y);
    let ext = local_extension_value(f, &m);
    holds_ge(lhs, ext + ext)
}

/// The M♮ exchange at `(x, y, i)`; with `allow_zero` unset, the M form.
pub(crate) fn exchange(f: Eval, x: &Point, y: &Point, i: usize, allow_zero: bool) -> bool {
    let n = x.dim();
    let lhs = pair_value(f, x, y);
    if allow_zero && holds_ge(lhs, pair_value(f, &x.shifted(i, -1), &y.shifted(i, 1))) {
        return true;
    }
    (0..n).filter(|&j| x[j] < y[j]).any(|j| {
        let xs = x.shifted(i, -1).shifted(j, 1);
        let ys = y.shifted(i, 1).shifted(j, -1);
        holds_ge(lhs, pair_value(f, &xs, &ys))
    })
}

/// The variants of the jump exchange axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum JumpRule {
    /// 2-step axiom, on the domain only.
    TwoStep,
    /// `(JM-EXC)`; on an indicator this is `(J-EXC)`.
    Exchange,
    /// `(J♮M-EXC)`; on an indicator this is `(J♮-EXC)`.
    NatExchange,
}

/// Signed unit steps `s` from `x` toward `y`, i.e. `(x, y)`-increments.
pub(crate) fn increments(x: &Point, y: &Point) -> Vec<Point> {
    let n = x.dim();
    let mut out = Vec::new();
    for i in 0..n {
        if x[i] < y[i] {
            out.push(Point::unit(n, i, 1));
        } else if x[i] > y[i] {
            out.push(Point::unit(n, i, -1));
        }
    }
    out
}

pub(crate) fn jump(f: Eval, x: &Point, y: &Point, s: &Point, rule: JumpRule) -> bool {
    let xs = x + s;
    let lhs = pair_value(f, x, y);
    match rule {
        JumpRule::TwoStep => {
            if f(&xs).is_finite() {
                return true;
            }
            increments(&xs, y).iter().any(|t| f(&(&xs + t)).is_finite())
        }
        JumpRule::Exchange | JumpRule::NatExchange => {
            if rule == JumpRule::NatExchange && holds_ge(lhs, pair_value(f, &xs, &(y - s))) {
                return true;
            }
            let ys = y - s;
            increments(&xs, y)
                .iter()
                .any(|t| holds_ge(lhs, pair_value(f, &(&xs + t), &(&ys - t))))
        }
    }
}

/// `f(x + e_i + e_j) + f(x) = f(x + e_i) + f(x + e_j)`.
pub(crate) fn modular(f: Eval, x: &Point, i: usize, j: usize) -> bool {
    let xi = x.shifted(i, 1);
    let xj = x.shifted(j, 1);
    let xij = xi.shifted(j, 1);
    pair_value(f, &xij, x) == pair_value(f, &xi, &xj)
}

/// `f(x − e_i) + f(x + e_i) ≥ 2 f(x)`.
pub(crate) fn axis_convex(f: Eval, x: &Point, i: usize) -> bool {
    let c = f(x);
    holds_ge(pair_value(f, &x.shifted(i, -1), &x.shifted(i, 1)), c + c)
}

/// Value of the multimodular lift `f̃(x₀, x) = f(x₁ − x₀, x₂ − x₁, …)`.
pub(crate) fn multimodular_lift_value(f: &LatticeFn, a: &Point) -> Value {
    let c = a.coords();
    let y: Vec<i64> = c.windows(2).map(|w| w[1] - w[0]).collect();
    f.value(&Point::new(y))
}

pub(crate) fn zero_if_member(member: bool) -> Value {
    if member {
        Value::Finite(int(0))
    } else {
        Value::Infinite
    }
}
