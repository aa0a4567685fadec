//! Random instances of each class.
//!
//! Most classes have a direct construction (laminar convex functions for
//! M♮, 2-separable diff-convex functions for L♮, degree systems of graphs
//! for jump classes, the `D` change of variables for multimodularity, the
//! `x₀ = −x(N)` lift for M). Integrally convex and discrete midpoint
//! convex instances are rejection-sampled. Every instance is checked by its
//! recognizer before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{check_fn, check_set, ClassLabel, Verdict};
use crate::error::{Error, Result};
use crate::lattice::{int, rat, DTransform, LatticeFn, LatticeSet, Point, Rational, Window};
use crate::ops::direct_sum_set;

/// A generated set or function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Set(LatticeSet),
    Fn(LatticeFn),
}

impl Instance {
    pub fn check(&self, label: ClassLabel) -> Result<Verdict> {
        match self {
            Instance::Set(s) => check_set(s, label),
            Instance::Fn(f) => check_fn(f, label),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Instance::Set(s) => s.dim(),
            Instance::Fn(f) => f.dim(),
        }
    }

    /// Number of stored points.
    pub fn len(&self) -> usize {
        match self {
            Instance::Set(s) => s.len(),
            Instance::Fn(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_set(&self) -> Option<&LatticeSet> {
        match self {
            Instance::Set(s) => Some(s),
            Instance::Fn(_) => None,
        }
    }

    pub fn as_fn(&self) -> Option<&LatticeFn> {
        match self {
            Instance::Fn(f) => Some(f),
            Instance::Set(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub label: ClassLabel,
    pub dim: usize,
    /// Instances lie inside this box; lifted instances keep their
    /// representatives inside it.
    pub window: Window,
    pub seed: u64,
    /// Upper bound on the number of stored points.
    pub max_size: usize,
}

impl GeneratorConfig {
    pub fn new(label: ClassLabel, dim: usize, seed: u64) -> Self {
        GeneratorConfig {
            label,
            dim,
            window: Window::cube(dim, -3, 3).expect("dim ≥ 1"),
            seed,
            max_size: 150,
        }
    }
}

/// Candidates drawn per call before giving up.
pub const BUDGET: usize = 400;

pub fn generate(config: &GeneratorConfig) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    generate_with(&mut rng, config.label, &config.window, config.max_size)
}

/// Draws an instance of `label` inside `window` from `rng`.
pub fn generate_with<R: Rng>(
    rng: &mut R,
    label: ClassLabel,
    window: &Window,
    max_size: usize,
) -> Result<Instance> {
    for _ in 0..BUDGET {
        let Some(candidate) = candidate(rng, label, window) else {
            continue;
        };
        if candidate.len() > max_size {
            continue;
        }
        let verdict = candidate.check(label)?;
        if verdict.member {
            return Ok(candidate);
        }
        if !is_rejection_sampled(label) {
            return Err(Error::InvalidSpec(format!(
                "constructed {label} instance rejected: {}",
                verdict.witness.expect("negative verdicts carry witnesses")
            )));
        }
    }
    Err(Error::BudgetExhausted {
        label: label.name(),
        budget: BUDGET,
    })
}

fn is_rejection_sampled(label: ClassLabel) -> bool {
    use ClassLabel::*;
    matches!(
        label,
        IntegrallyConvexSet | IntegrallyConvexFn | GlobalDmcSet | GlobalDmcFn | LocalDmcFn
    )
}

fn candidate<R: Rng>(rng: &mut R, label: ClassLabel, w: &Window) -> Option<Instance> {
    use ClassLabel::*;
    let n = w.dim();
    Some(match label {
        IntegerBox => Instance::Set(LatticeSet::from_window(&random_box(rng, w))),
        SeparableConvex => {
            let b = random_box(rng, w);
            let phis: Vec<Univariate> = (0..n).map(|_| Univariate::random(rng)).collect();
            let f = LatticeFn::new(
                n,
                b.points().map(|p| {
                    let v = (0..n).map(|i| phis[i].eval(p[i])).sum();
                    (p, v)
                }),
            )
            .ok()?;
            Instance::Fn(f)
        }
        IntegrallyConvexSet => Instance::Set(polyhedral_set(rng, w)?),
        IntegrallyConvexFn => {
            let dom = if rng.gen_bool(0.5) {
                LatticeSet::from_window(&random_box(rng, w))
            } else {
                polyhedral_set(rng, w)?
            };
            Instance::Fn(quadratic_on(rng, &dom, true))
        }
        LNatSet => Instance::Set(difference_set(rng, w)?),
        LNatFn => Instance::Fn(diff_convex_fn(rng, w)?),
        LSet => Instance::Set(lifted_difference_set(rng, w)?),
        LFn => Instance::Fn(lifted_diff_convex_fn(rng, w)?),
        MNatSet => Instance::Set(laminar_set(rng, w)?.0),
        MNatFn => Instance::Fn(random_laminar_fn(rng, w)?),
        MSet => Instance::Set(m_lift_set(rng, w)?),
        MFn => Instance::Fn(m_lift_fn(rng, w)?),
        MultimodularSet => {
            let t = difference_set(rng, w)?;
            Instance::Set(t.d_inverse_transform().ok()?.restrict_to_window(w).ok()?)
        }
        MultimodularFn => {
            let g = diff_convex_fn(rng, w)?;
            Instance::Fn(g.d_inverse_transform().ok()?.restrict_to_window(w).ok()?)
        }
        GlobalDmcSet => {
            let b = LatticeSet::from_window(&random_box(rng, w));
            let q = quadratic_on(rng, &b, false);
            let cut = q.values().values().copied().min()? + int(rng.gen_range(0..6));
            let pts = q.entries().filter(|(_, v)| **v <= cut).map(|(p, _)| p.clone());
            Instance::Set(LatticeSet::new(n, pts).ok()?)
        }
        GlobalDmcFn | LocalDmcFn => {
            let b = LatticeSet::from_window(&random_box(rng, w));
            Instance::Fn(quadratic_on(rng, &b, false))
        }
        JumpSystem | SimultExchJump => Instance::Set(simult_exchange_set(rng, w)?),
        ConstParityJump => Instance::Set(random_degree_system(rng, w, false)?.domain()),
        JumpMFn => Instance::Fn(random_degree_system(rng, w, true)?),
        JumpMNatFn => Instance::Fn(jump_mnat_fn(rng, w)?),
    })
}

/// Convex univariate `a t² + b t + c |t − d| + e`.
#[derive(Clone, Copy, Debug)]
struct Univariate {
    a: i64,
    b: Rational,
    c: i64,
    d: i64,
    e: i64,
}

impl Univariate {
    fn random<R: Rng>(rng: &mut R) -> Self {
        Univariate {
            a: rng.gen_range(0..=1),
            b: rat(rng.gen_range(-4..=4), 2),
            c: rng.gen_range(0..=2),
            d: rng.gen_range(-1..=1),
            e: rng.gen_range(-1..=1),
        }
    }

    fn eval(&self, t: i64) -> Rational {
        int(self.a * t * t + self.c * (t - self.d).abs() + self.e) + self.b * t
    }
}

fn random_box<R: Rng>(rng: &mut R, w: &Window) -> Window {
    let n = w.dim();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let a = rng.gen_range(w.lo()[i]..=w.hi()[i]);
        let width = rng.gen_range(0..=2);
        lo.push(a);
        hi.push((a + width).min(w.hi()[i]));
    }
    Window::new(Point::new(lo), Point::new(hi)).expect("lo ≤ hi")
}

fn random_point<R: Rng>(rng: &mut R, w: &Window) -> Point {
    Point::new((0..w.dim()).map(|i| rng.gen_range(w.lo()[i]..=w.hi()[i])).collect())
}

/// Lattice points of a random box cut by a few `{−1,0,1}` inequalities.
fn polyhedral_set<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeSet> {
    let n = w.dim();
    let c = random_point(rng, w);
    let b = random_box(rng, &grow(w, &c, 1));
    let z = random_point(rng, &b);
    let cuts: Vec<(Vec<i64>, i64)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
            let rhs = a.iter().zip(z.coords()).map(|(x, y)| x * y).sum::<i64>() + rng.gen_range(0..=1);
            (a, rhs)
        })
        .collect();
    let pts = b.points().filter(|p| {
        cuts.iter()
            .all(|(a, rhs)| a.iter().zip(p.coords()).map(|(x, y)| x * y).sum::<i64>() <= *rhs)
    });
    LatticeSet::new(n, pts).ok()
}

/// A box of side up to 3 around `c`, clipped to `w`.
fn grow(w: &Window, c: &Point, r: i64) -> Window {
    let lo = (0..w.dim()).map(|i| (c[i] - r).max(w.lo()[i])).collect();
    let hi = (0..w.dim()).map(|i| (c[i] + r).min(w.hi()[i])).collect();
    Window::new(Point::new(lo), Point::new(hi)).expect("c inside w")
}

/// `x^T Q x + b·x` on `dom`; with `dominant`, `Q` is diagonally dominant.
fn quadratic_on<R: Rng>(rng: &mut R, dom: &LatticeSet, dominant: bool) -> LatticeFn {
    let n = dom.dim();
    let mut q = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(-1..=1);
            q[i][j] = v;
            q[j][i] = v;
        }
    }
    for i in 0..n {
        let off: i64 = (0..n).filter(|&j| j != i).map(|j| q[i][j].abs()).sum();
        q[i][i] = if dominant {
            off + rng.gen_range(0..=1)
        } else {
            rng.gen_range(0..=2)
        };
    }
    let lin: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-2..=2), 2)).collect();
    LatticeFn::from_fn(dom, |p| {
        let mut v = int(0);
        for i in 0..n {
            for j in 0..n {
                v += int(q[i][j] * p[i] * p[j]);
            }
        }
        v + p.dot(&lin)
    })
    .expect("finite domain")
}

/// `{x ∈ B : x_i − x_j ≤ d_ij}` for a random box `B` and random pairs,
/// with bounds chosen around an anchor so the set is nonempty.
fn difference_set<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeSet> {
    let n = w.dim();
    let b = grow(w, &random_point(rng, w), rng.gen_range(1..=2));
    let z = random_point(rng, &b);
    let cons = random_difference_constraints(rng, n, &z, 0.5);
    let pts = b.points().filter(|p| satisfies(p, &cons));
    LatticeSet::new(n, pts).ok()
}

fn random_difference_constraints<R: Rng>(
    rng: &mut R,
    n: usize,
    z: &Point,
    density: f64,
) -> Vec<(usize, usize, i64)> {
    let mut cons = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(density) {
                cons.push((i, j, z[i] - z[j] + rng.gen_range(0..=2)));
            }
        }
    }
    cons
}

fn satisfies(p: &Point, cons: &[(usize, usize, i64)]) -> bool {
    cons.iter().all(|&(i, j, d)| p[i] - p[j] <= d)
}

/// A 2-separable diff-convex function on a difference-constraint set.
fn diff_convex_fn<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeFn> {
    let n = w.dim();
    let dom = difference_set(rng, w)?;
    let single: Vec<Univariate> = (0..n).map(|_| Univariate::random(rng)).collect();
    let pair = random_pair_terms(rng, n);
    LatticeFn::from_fn(&dom, |p| {
        (0..n).map(|i| single[i].eval(p[i])).sum::<Rational>() + pair_sum(&pair, p)
    })
    .ok()
}

fn random_pair_terms<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize, Univariate)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.4) {
                out.push((i, j, Univariate::random(rng)));
            }
        }
    }
    out
}

fn pair_sum(terms: &[(usize, usize, Univariate)], p: &Point) -> Rational {
    terms.iter().map(|(i, j, phi)| phi.eval(p[*i] - p[*j])).sum()
}

/// Representatives (last coordinate 0) of `{x : x_i − x_j ≤ d_ij}` where
/// every coordinate is tied to the last one in both directions.
fn lifted_reps<R: Rng>(rng: &mut R, w: &Window) -> Vec<Point> {
    let n = w.dim();
    let mut z = random_point(rng, &grow(w, &Point::zeros(n), 2));
    let last = z[n - 1];
    z = z.shifted_all(-last);
    let mut cons = random_difference_constraints(rng, n, &z, 0.4);
    for i in 0..n - 1 {
        cons.push((i, n - 1, z[i] + rng.gen_range(0..=1)));
        cons.push((n - 1, i, -z[i] + rng.gen_range(0..=1)));
    }
    let mut lo = w.lo().coords().to_vec();
    let mut hi = w.hi().coords().to_vec();
    lo[n - 1] = 0;
    hi[n - 1] = 0;
    crate::lattice::BoxIter::new(lo, hi)
        .filter(|p| satisfies(p, &cons))
        .collect()
}

fn lifted_difference_set<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeSet> {
    LatticeSet::lifted(w.dim(), lifted_reps(rng, w)).ok()
}

/// `Σ φ_ij(x_i − x_j) + r·x_1` on a lifted difference-constraint set.
fn lifted_diff_convex_fn<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeFn> {
    let n = w.dim();
    let reps = lifted_reps(rng, w);
    let pair = random_pair_terms(rng, n);
    let ramp = int(rng.gen_range(-2..=2));
    let entries: Vec<(Point, Rational)> = reps
        .into_iter()
        .map(|p| {
            let v = pair_sum(&pair, &p) + ramp * p[0];
            (p, v)
        })
        .collect();
    LatticeFn::lifted(n, entries, ramp).ok()
}

/// A random laminar family on `0..n` containing every singleton.
fn random_laminar<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<usize>> {
    let mut family: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut tops: Vec<Vec<usize>> = family.clone();
    let merges = rng.gen_range(0..n.max(1));
    for _ in 0..merges {
        if tops.len() < 2 {
            break;
        }
        tops.shuffle(rng);
        let k = rng.gen_range(2..=tops.len());
        let mut merged: Vec<usize> = tops.drain(..k).flatten().collect();
        merged.sort_unstable();
        family.push(merged.clone());
        tops.push(merged);
    }
    family
}

/// A laminar set with its family and the bounds `(a_A, b_A)`.
type Laminar = (LatticeSet, Vec<Vec<usize>>, Vec<(i64, i64)>);

/// `{x ∈ w : a_A ≤ x(A) ≤ b_A, A ∈ 𝒯}` around a random anchor.
fn laminar_set<R: Rng>(rng: &mut R, w: &Window) -> Option<Laminar> {
    let n = w.dim();
    let family = random_laminar(rng, n);
    let z = random_point(rng, w);
    let bounds: Vec<(i64, i64)> = family
        .iter()
        .map(|a| {
            let s = z.sum_over(a);
            (s - rng.gen_range(0..=1), s + rng.gen_range(0..=2))
        })
        .collect();
    let pts = w.points().filter(|p| {
        family
            .iter()
            .zip(&bounds)
            .all(|(a, &(lo, hi))| (lo..=hi).contains(&p.sum_over(a)))
    });
    let s = LatticeSet::new(n, pts).ok()?;
    Some((s, family, bounds))
}

/// `Σ_{A ∈ 𝒯} φ_A(x(A))` on the points of `dom`.
pub fn laminar_convex_fn(
    dom: &LatticeSet,
    family: &[Vec<usize>],
    phis: &[&dyn Fn(i64) -> Rational],
) -> Result<LatticeFn> {
    if family.len() != phis.len() {
        return Err(Error::InvalidSpec("one univariate function per laminar member".into()));
    }
    LatticeFn::from_fn(dom, |p| {
        family.iter().zip(phis).map(|(a, phi)| phi(p.sum_over(a))).sum()
    })
}

fn random_laminar_fn<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeFn> {
    let (dom, family, _) = laminar_set(rng, w)?;
    let phis: Vec<Univariate> = family.iter().map(|_| Univariate::random(rng)).collect();
    let refs: Vec<Box<dyn Fn(i64) -> Rational>> = phis
        .iter()
        .map(|phi| {
            let phi = *phi;
            Box::new(move |t| phi.eval(t)) as Box<dyn Fn(i64) -> Rational>
        })
        .collect();
    let dyn_refs: Vec<&dyn Fn(i64) -> Rational> = refs.iter().map(|b| b.as_ref()).collect();
    laminar_convex_fn(&dom, &family, &dyn_refs).ok()
}

/// Window of the last `n − 1` coordinates.
fn tail_window(w: &Window) -> Option<Window> {
    if w.dim() < 2 {
        return None;
    }
    Window::new(
        Point::new(w.lo().coords()[1..].to_vec()),
        Point::new(w.hi().coords()[1..].to_vec()),
    )
    .ok()
}

/// `{(−x(N), x) : x ∈ S}` for an M♮-convex `S`, clipped to `w`.
fn m_lift_set<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeSet> {
    let Some(tw) = tail_window(w) else {
        return Some(LatticeSet::singleton(random_point(rng, w)));
    };
    let (s, _, _) = laminar_set(rng, &tw)?;
    let lifted = s.iter().map(|x| Point::new(vec![-x.sum()]).concat(x));
    LatticeSet::new(w.dim(), lifted).ok()?.restrict_to_window(w).ok()
}

fn m_lift_fn<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeFn> {
    let Some(tw) = tail_window(w) else {
        let p = random_point(rng, w);
        return LatticeFn::new(1, [(p, int(rng.gen_range(-2..=2)))]).ok();
    };
    let f = random_laminar_fn(rng, &tw)?;
    let lifted = f
        .entries()
        .map(|(x, v)| (Point::new(vec![-x.sum()]).concat(x), *v));
    LatticeFn::new(w.dim(), lifted).ok()?.restrict_to_window(w).ok()
}

/// Minimum weight of an edge subset with each degree sequence; a loop adds
/// two to its vertex. The domain is the degree system of the graph.
pub fn degree_fn(n: usize, edges: &[(usize, usize)], weights: &[Rational]) -> Result<LatticeFn> {
    if edges.len() != weights.len() || edges.iter().any(|&(a, b)| a >= n || b >= n) {
        return Err(Error::InvalidSpec("edges must have weights and lie on 0..n".into()));
    }
    if edges.len() > 16 {
        return Err(Error::InvalidSpec("at most 16 edges are enumerated".into()));
    }
    let mut best = std::collections::BTreeMap::<Point, Rational>::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut deg = vec![0i64; n];
        let mut weight = int(0);
        for (k, &(a, b)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
                weight += weights[k];
            }
        }
        best.entry(Point::new(deg))
            .and_modify(|v| {
                if weight < *v {
                    *v = weight
                }
            })
            .or_insert(weight);
    }
    LatticeFn::new(n, best)
}

/// Degree system (optionally weighted) of a random multigraph with loops,
/// translated to a random position inside `w`.
fn random_degree_system<R: Rng>(rng: &mut R, w: &Window, weighted: bool) -> Option<LatticeFn> {
    let n = w.dim();
    let mut deg = vec![0i64; n];
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(1..=7) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let add = if a == b { 2 } else { 1 };
        if deg[a] + add > 3 || deg[b] + add > 3 || (a != b && deg[b] + 1 > 3) {
            continue;
        }
        deg[a] += 1;
        deg[b] += 1;
        edges.push((a, b));
    }
    let weights: Vec<Rational> = edges
        .iter()
        .map(|_| if weighted { int(rng.gen_range(-2..=2)) } else { int(0) })
        .collect();
    let f = degree_fn(n, &edges, &weights).ok()?;
    let shift: Vec<i64> = (0..n)
        .map(|i| rng.gen_range(w.lo()[i]..=(w.hi()[i] - deg[i]).max(w.lo()[i])))
        .collect();
    let shift = Point::new(shift);
    let moved = f.entries().map(|(p, v)| (p + &shift, *v));
    LatticeFn::new(n, moved).ok()?.restrict_to_window(w).ok()
}

/// M♮-convex sets, constant-parity jump systems, and direct sums of the
/// two; all satisfy the simultaneous exchange axiom.
fn simult_exchange_set<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeSet> {
    let n = w.dim();
    match rng.gen_range(0..3) {
        0 => Some(laminar_set(rng, w)?.0),
        1 => Some(random_degree_system(rng, w, false)?.domain()),
        _ => {
            if n < 2 {
                return Some(laminar_set(rng, w)?.0);
            }
            let k = rng.gen_range(1..n);
            let (w1, w2) = split_window(w, k);
            let a = laminar_set(rng, &w1)?.0;
            let b = random_degree_system(rng, &w2, false)?.domain();
            direct_sum_set(&a, &b).ok()
        }
    }
}

fn jump_mnat_fn<R: Rng>(rng: &mut R, w: &Window) -> Option<LatticeFn> {
    let n = w.dim();
    match rng.gen_range(0..3) {
        0 => random_laminar_fn(rng, w),
        1 => random_degree_system(rng, w, true),
        _ => {
            if n < 2 {
                return random_laminar_fn(rng, w);
            }
            let k = rng.gen_range(1..n);
            let (w1, w2) = split_window(w, k);
            let a = random_laminar_fn(rng, &w1)?;
            let b = random_degree_system(rng, &w2, true)?;
            crate::ops::direct_sum_fn(&a, &b).ok()
        }
    }
}

fn split_window(w: &Window, k: usize) -> (Window, Window) {
    let part = |r: std::ops::Range<usize>| {
        Window::new(
            Point::new(w.lo().coords()[r.clone()].to_vec()),
            Point::new(w.hi().coords()[r].to_vec()),
        )
        .expect("sub-box of a valid window")
    };
    (part(0..k), part(k..w.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_label_generates_sound_instances() {
        for label in ClassLabel::ALL {
            for dim in 1..=3 {
                for seed in 0..4 {
                    let cfg = GeneratorConfig::new(label, dim, seed);
                    let inst = generate(&cfg).unwrap_or_else(|e| panic!("{label} n={dim}: {e}"));
                    assert!(inst.check(label).unwrap().member, "{label}");
                    assert_eq!(inst.dim(), dim);
                    assert!(inst.len() <= cfg.max_size);
                }
            }
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let cfg = GeneratorConfig::new(ClassLabel::MNatFn, 3, 7);
        assert_eq!(generate(&cfg).unwrap(), generate(&cfg).unwrap());
    }

    #[test]
    fn laminar_example_is_mnat() {
        let dom = LatticeSet::from_window(&Window::cube(3, -2, 2).unwrap());
        let family = vec![vec![0, 1, 2], vec![0, 1], vec![0], vec![1], vec![2]];
        let abs = |t: i64| int(t.abs());
        let sq = |t: i64| int(t * t);
        let zero = |_: i64| int(0);
        let g = laminar_convex_fn(&dom, &family, &[&abs, &sq, &zero, &zero, &sq]).unwrap();
        assert_eq!(g.value(&Point::from([1, 0, 0])), int(2).into());
        assert!(check_fn(&g, ClassLabel::MNatFn).unwrap().member);
    }

    #[test]
    fn two_vertex_degree_function() {
        let f = degree_fn(2, &[(0, 1), (0, 0), (1, 1)], &[int(1), int(0), int(0)]).unwrap();
        let expected = Window::cube(2, 0, 3)
            .unwrap()
            .points()
            .filter(|p| (p[0] + p[1]) % 2 == 0)
            .map(|p| {
                let v = int(p[0] % 2);
                (p, v)
            });
        assert_eq!(f, LatticeFn::new(2, expected).unwrap());
        assert!(check_fn(&f, ClassLabel::JumpMFn).unwrap().member);
    }
}
