//! Brute-force recognizers. Every pair (and increment) of stored points is
//! examined in a fixed order, by ℓ∞ distance and then lexicographically,
//! and the first violation found is returned, so witnesses are canonical.

use std::collections::HashMap;

use super::axioms::{self, JumpRule};
use super::{ClassLabel, Verdict, Witness};
use crate::error::{Error, Result};
use crate::hull::{antipodal_bound, local_extension_value, HalfPoint};
use crate::lattice::{holds_ge, int, midpoint_round, DTransform, LatticeFn, LatticeSet, Point, Value};

/// Decides membership of a set in a set class.
pub fn check_set(s: &LatticeSet, label: ClassLabel) -> Result<Verdict> {
    if !label.is_set() {
        return Err(Error::LabelKindMismatch {
            label: label.name(),
            kind: "set",
        });
    }
    if s.is_lifted() && !label.is_lifted() {
        return Err(Error::LiftedInput(label.name()));
    }
    let f = s.indicator();
    let witness = match label {
        ClassLabel::IntegerBox => box_witness(s),
        ClassLabel::MultimodularSet => multimodular_set(s)?,
        ClassLabel::JumpSystem => jump(&f, JumpRule::TwoStep),
        ClassLabel::ConstParityJump => jump(&f, JumpRule::Exchange),
        ClassLabel::SimultExchJump => jump(&f, JumpRule::NatExchange),
        ClassLabel::IntegrallyConvexSet => integrally_convex(&f),
        ClassLabel::LNatSet => midpoint(&f, |_| true),
        ClassLabel::GlobalDmcSet => midpoint(&f, |d| d >= 2),
        ClassLabel::LSet => l_convex(&f),
        ClassLabel::MNatSet => exchange(&f, true),
        ClassLabel::MSet => exchange(&f, false),
        _ => unreachable!("set labels are covered"),
    };
    Ok(verdict(witness))
}

/// Decides membership of a function in a function class.
pub fn check_fn(f: &LatticeFn, label: ClassLabel) -> Result<Verdict> {
    if label.is_set() {
        return Err(Error::LabelKindMismatch {
            label: label.name(),
            kind: "function",
        });
    }
    if f.is_lifted() && !label.is_lifted() {
        return Err(Error::LiftedInput(label.name()));
    }
    let witness = match label {
        ClassLabel::SeparableConvex => separable(f),
        ClassLabel::IntegrallyConvexFn => integrally_convex(f),
        ClassLabel::LNatFn => midpoint(f, |_| true),
        ClassLabel::GlobalDmcFn => midpoint(f, |d| d >= 2),
        ClassLabel::LocalDmcFn => local_dmc(f),
        ClassLabel::LFn => l_convex(f),
        ClassLabel::MNatFn => exchange(f, true),
        ClassLabel::MFn => exchange(f, false),
        ClassLabel::MultimodularFn => multimodular_fn(f),
        ClassLabel::JumpMFn => jump(f, JumpRule::Exchange),
        ClassLabel::JumpMNatFn => jump(f, JumpRule::NatExchange),
        _ => unreachable!("function labels are covered"),
    };
    Ok(verdict(witness))
}

fn verdict(w: Option<Witness>) -> Verdict {
    match w {
        Some(w) => Verdict::violated(w),
        None => Verdict::member(),
    }
}

/// Index pairs of `pts` ordered by distance, then by the points; with
/// `symmetric`, only `i < j`. Pairs with distance outside `keep` are
/// dropped.
fn pairs(pts: &[&Point], symmetric: bool, keep: impl Fn(i64) -> bool) -> Vec<(usize, usize)> {
    let mut out: Vec<(i64, usize, usize)> = Vec::new();
    for i in 0..pts.len() {
        for j in 0..pts.len() {
            if i == j || (symmetric && j < i) {
                continue;
            }
            let d = pts[i].linf_distance(pts[j]);
            if keep(d) {
                out.push((d, i, j));
            }
        }
    }
    out.sort_unstable();
    out.into_iter().map(|(_, i, j)| (i, j)).collect()
}

fn box_witness(s: &LatticeSet) -> Option<Witness> {
    let bb = s.bounding_box();
    if bb.len() == s.len() as u128 {
        return None;
    }
    bb.points()
        .find(|p| !s.contains(p))
        .map(|missing| Witness::NotBox { missing })
}

fn separable(f: &LatticeFn) -> Option<Witness> {
    let bb = f.bounding_box();
    if bb.len() != f.len() as u128 {
        let missing = bb.points().find(|p| !f.in_domain(p))?;
        return Some(Witness::NotBox { missing });
    }
    let eval = |p: &Point| f.value(p);
    let n = f.dim();
    for x in bb.points() {
        for i in 0..n {
            let (lo, hi) = (x.shifted(i, -1), x.shifted(i, 1));
            if bb.contains(&lo) && bb.contains(&hi) && !axioms::axis_convex(&eval, &x, i) {
                return Some(Witness::AxisNonConvex { x, i });
            }
        }
    }
    for x in bb.points() {
        for i in 0..n {
            for j in i + 1..n {
                let far = x.shifted(i, 1).shifted(j, 1);
                if bb.contains(&far) && !axioms::modular(&eval, &x, i, j) {
                    return Some(Witness::NonModular { x, i, j });
                }
            }
        }
    }
    None
}

fn midpoint(f: &LatticeFn, keep: impl Fn(i64) -> bool) -> Option<Witness> {
    let pts: Vec<&Point> = f.values().keys().collect();
    let eval = |p: &Point| f.value(p);
    pairs(&pts, true, keep)
        .into_iter()
        .find(|&(i, j)| !axioms::rounded_midpoint(&eval, pts[i], pts[j]))
        .map(|(i, j)| Witness::RoundedMidpoint {
            x: pts[i].clone(),
            y: pts[j].clone(),
        })
}

fn local_dmc(f: &LatticeFn) -> Option<Witness> {
    let pts: Vec<&Point> = f.values().keys().collect();
    let eval = |p: &Point| f.value(p);
    pairs(&pts, true, |d| d >= 2)
        .into_iter()
        .find(|&(i, j)| {
            let (x, y) = (pts[i], pts[j]);
            if x.linf_distance(y) == 2 {
                !axioms::rounded_midpoint(&eval, x, y)
            } else {
                let (up, down) = midpoint_round(x, y).expect("same dimension");
                !(f.in_domain(&up) && f.in_domain(&down))
            }
        })
        .map(|(i, j)| Witness::RoundedMidpoint {
            x: pts[i].clone(),
            y: pts[j].clone(),
        })
}

/// Midpoint test of integral convexity. Pairs at distance at most one
/// satisfy it trivially. Per midpoint, an antipodal-pair upper bound on
/// `f̃` settles most pairs before any LP is solved.
fn integrally_convex(f: &LatticeFn) -> Option<Witness> {
    let pts: Vec<&Point> = f.values().keys().collect();
    let mut bounds: HashMap<Vec<i64>, (Value, Option<Value>)> = HashMap::new();
    for (i, j) in pairs(&pts, true, |d| d >= 2) {
        let (x, y) = (pts[i], pts[j]);
        let lhs = f.value(x) + f.value(y);
        let m = HalfPoint::midpoint(x, y).expect("same dimension");
        let entry = bounds
            .entry(m.twice().to_vec())
            .or_insert_with(|| (antipodal_bound(f, &m), None));
        if holds_ge(lhs, entry.0 + entry.0) {
            continue;
        }
        let ext = *entry.1.get_or_insert_with(|| local_extension_value(f, &m));
        if !holds_ge(lhs, ext + ext) {
            return Some(Witness::HullMidpoint {
                x: x.clone(),
                y: y.clone(),
            });
        }
    }
    None
}

/// Submodularity of a lifted function. With representatives `p < q`,
/// every pair of domain points is a shift of `(p + k·1, q)`, and only
/// shifts `k` that leave the two incomparable can violate the inequality.
fn lifted_submodular(f: &LatticeFn) -> Option<Witness> {
    let reps: Vec<&Point> = f.values().keys().collect();
    let eval = |p: &Point| f.value(p);
    let mut cands: Vec<(i64, Point, Point)> = Vec::new();
    for (a, p) in reps.iter().enumerate() {
        for q in &reps[a + 1..] {
            let diff = *q - *p;
            let lo = diff.coords().iter().min().copied().unwrap_or(0) + 1;
            let hi = diff.coords().iter().max().copied().unwrap_or(0) - 1;
            for k in lo..=hi {
                let x = p.shifted_all(k);
                let (x, y) = if x <= **q { (x, (*q).clone()) } else { ((*q).clone(), x) };
                cands.push((x.linf_distance(&y), x, y));
            }
        }
    }
    cands.sort_unstable();
    cands
        .into_iter()
        .find(|(_, x, y)| !axioms::lattice(&eval, x, y))
        .map(|(_, x, y)| Witness::Lattice { x, y })
}

fn l_convex(f: &LatticeFn) -> Option<Witness> {
    if !f.is_lifted() {
        let x = f
            .values()
            .keys()
            .find(|p| !f.in_domain(&p.shifted_all(1)))
            .expect("a finite domain is not invariant under +1")
            .clone();
        return Some(Witness::NotShiftInvariant { x });
    }
    lifted_submodular(f)
}

fn multimodular_fn(f: &LatticeFn) -> Option<Witness> {
    // f̃(x₀, x) = f(x₁ − x₀, …, x_n − x_{n−1}) is invariant along 1 in
    // n+1 dimensions; its slice x₀ = 0 is reached through prefix sums.
    let entries = f.entries().map(|(y, v)| {
        let mut acc = 0;
        let mut c = vec![0];
        c.extend(y.coords().iter().map(|t| {
            acc += t;
            acc
        }));
        (Point::new(c), *v)
    });
    let lift = LatticeFn::lifted(f.dim() + 1, entries, int(0)).expect("lift of a valid function");
    lifted_submodular(&lift)
}

fn multimodular_set(s: &LatticeSet) -> Result<Option<Witness>> {
    let t = s.d_transform()?;
    let d = crate::lattice::DMatrix::new(s.dim());
    Ok(midpoint(&t.indicator(), |_| true).map(|w| match w {
        Witness::RoundedMidpoint { x, y } => Witness::RoundedMidpoint {
            x: d.apply(&x),
            y: d.apply(&y),
        },
        other => other,
    }))
}

fn exchange(f: &LatticeFn, allow_zero: bool) -> Option<Witness> {
    let pts: Vec<&Point> = f.values().keys().collect();
    let eval = |p: &Point| f.value(p);
    for (a, b) in pairs(&pts, false, |_| true) {
        let (x, y) = (pts[a], pts[b]);
        for i in (0..x.dim()).filter(|&i| x[i] > y[i]) {
            if !axioms::exchange(&eval, x, y, i, allow_zero) {
                return Some(Witness::Exchange {
                    x: x.clone(),
                    y: y.clone(),
                    i,
                });
            }
        }
    }
    None
}

fn jump(f: &LatticeFn, rule: JumpRule) -> Option<Witness> {
    let pts: Vec<&Point> = f.values().keys().collect();
    let eval = |p: &Point| f.value(p);
    for (a, b) in pairs(&pts, false, |_| true) {
        let (x, y) = (pts[a], pts[b]);
        for s in axioms::increments(x, y) {
            if !axioms::jump(&eval, x, y, &s, rule) {
                return Some(Witness::Jump {
                    x: x.clone(),
                    y: y.clone(),
                    s,
                });
            }
        }
    }
    None
}
