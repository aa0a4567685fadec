//! Independent oracles and instance builders shared by the integration
//! tests. Nothing here calls the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use dconv_core::hull::HalfPoint;
use dconv_core::lab::{generate, GeneratorConfig, Instance};
use dconv_core::lattice::BoxIter;
use dconv_core::{int, rat, ClassLabel, LatticeFn, LatticeSet, Point, Rational, Window};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(c: &[i64]) -> Point {
    Point::new(c.to_vec())
}

pub fn set(dim: usize, pts: &[&[i64]]) -> LatticeSet {
    LatticeSet::new(dim, pts.iter().map(|c| p(c))).unwrap()
}

pub fn cube(dim: usize, lo: i64, hi: i64) -> Window {
    Window::cube(dim, lo, hi).unwrap()
}

pub fn member(label: ClassLabel, dim: usize, seed: u64) -> Instance {
    generate(&GeneratorConfig::new(label, dim, seed)).unwrap()
}

pub fn member_set(label: ClassLabel, dim: usize, seed: u64) -> LatticeSet {
    member(label, dim, seed).as_set().expect("set label").clone()
}

pub fn member_fn(label: ClassLabel, dim: usize, seed: u64) -> LatticeFn {
    member(label, dim, seed).as_fn().expect("function label").clone()
}

/// Each point of `w` kept with probability `density`; never empty.
pub fn random_set(rng: &mut impl Rng, w: &Window, density: f64) -> LatticeSet {
    let all: Vec<Point> = w.points().collect();
    let mut pts: Vec<Point> = all.iter().filter(|_| rng.gen_bool(density)).cloned().collect();
    if pts.is_empty() {
        pts.push(all.choose(rng).unwrap().clone());
    }
    LatticeSet::new(w.dim(), pts).unwrap()
}

/// Random values in `[-4, 4]` (halves included) on a random subset of `w`.
pub fn random_fn(rng: &mut impl Rng, w: &Window, density: f64) -> LatticeFn {
    let dom = random_set(rng, w, density);
    let entries: Vec<(Point, Rational)> =
        dom.iter().map(|x| (x.clone(), rat(rng.gen_range(-8..=8), 2))).collect();
    LatticeFn::new(w.dim(), entries).unwrap()
}

/// Exact Gaussian elimination. Returns the unique solution of `a·λ = b`
/// or `None` when the system is inconsistent or underdetermined.
pub fn solve_unique(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, &v)| r.iter().copied().chain([v]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| m[r][col] != int(0)) else {
            continue;
        };
        m.swap(row, pr);
        let pv = m[row][col];
        for v in m[row].iter_mut() {
            *v /= pv;
        }
        for r in 0..rows {
            if r != row && m[r][col] != int(0) {
                let k = m[r][col];
                for c in 0..=cols {
                    let d = m[row][c] * k;
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| r[cols] != int(0)) || pivots.len() < cols {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols]).collect())
}

/// `x ∈ conv(S ∩ N(x))` by Carathéodory: some affinely independent subset
/// of at most `n + 1` neighbours has nonnegative barycentric coordinates.
pub fn hull_oracle(s: &LatticeSet, x: &HalfPoint) -> bool {
    let n = x.dim();
    let cands: Vec<Point> = BoxIter::new(x.floor().into_coords(), x.ceil().into_coords())
        .filter(|z| s.contains(z))
        .collect();
    let target: Vec<Rational> = x.coords().into_iter().chain([int(1)]).collect();
    let k = cands.len();
    for mask in 1u32..(1 << k) {
        if mask.count_ones() as usize > n + 1 {
            continue;
        }
        let chosen: Vec<&Point> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &cands[i]).collect();
        let a: Vec<Vec<Rational>> = (0..=n)
            .map(|r| {
                chosen
                    .iter()
                    .map(|z| if r < n { int(z[r]) } else { int(1) })
                    .collect()
            })
            .collect();
        if let Some(lambda) = solve_unique(&a, &target) {
            if lambda.iter().all(|l| *l >= int(0)) {
                return true;
            }
        }
    }
    false
}

fn add(x: &Point, y: &Point) -> Point {
    Point::new(x.coords().iter().zip(y.coords()).map(|(a, b)| a + b).collect())
}

pub fn brute_minkowski(a: &LatticeSet, b: &LatticeSet) -> LatticeSet {
    let pts: Vec<Point> = a.iter().flat_map(|x| b.iter().map(move |y| add(x, y))).collect();
    LatticeSet::new(a.dim(), pts).unwrap()
}

pub fn brute_convolution(f: &LatticeFn, g: &LatticeFn) -> LatticeFn {
    let mut best: BTreeMap<Point, Rational> = BTreeMap::new();
    for (x, fx) in f.entries() {
        for (y, gy) in g.entries() {
            let v = fx + gy;
            best.entry(add(x, y))
                .and_modify(|b| *b = (*b).min(v))
                .or_insert(v);
        }
    }
    LatticeFn::new(f.dim(), best).unwrap()
}

/// `f̃(x₀, x) = f(x)` when `x₀ = −x(N)`.
pub fn m_lift(f: &LatticeFn) -> LatticeFn {
    LatticeFn::new(
        f.dim() + 1,
        f.entries().map(|(x, v)| (p(&[-x.sum()]).concat(x), *v)),
    )
    .unwrap()
}

/// `f̃(x₀, x) = f(x)` when `x₀` is the parity of `x(N)`.
pub fn parity_lift(f: &LatticeFn) -> LatticeFn {
    LatticeFn::new(
        f.dim() + 1,
        f.entries().map(|(x, v)| (p(&[x.sum().rem_euclid(2)]).concat(x), *v)),
    )
    .unwrap()
}

const GRID: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];

/// Every `c` in `{−2, −1, −1/2, 0, 1/2, 1, 2}^n` when `n ≤ 3`, plus `extra`
/// random rationals with denominators up to 4.
pub fn c_samples(n: usize, extra: usize, rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    if n <= 3 {
        for idx in BoxIter::new(vec![0; n], vec![6; n]) {
            out.push(idx.coords().iter().map(|&i| {
                let (a, b) = GRID[i as usize];
                rat(a, b)
            }).collect());
        }
    }
    for _ in 0..extra {
        out.push((0..n).map(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=4))).collect());
    }
    out
}
