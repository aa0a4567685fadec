//! Fixtures shared by the benchmarks.

use dconv_core::lab::{generate, GeneratorConfig, Instance};
use dconv_core::{int, ClassLabel, LatticeFn, LatticeSet, Window};

/// A deterministic member of `label` on the cube `[-r, r]^dim`.
pub fn member(label: ClassLabel, dim: usize, r: i64, seed: u64) -> Instance {
    let mut cfg = GeneratorConfig::new(label, dim, seed);
    cfg.window = Window::cube(dim, -r, r).expect("valid cube");
    cfg.max_size = usize::MAX;
    generate(&cfg).expect("generator succeeds")
}

/// The full cube `[-r, r]^dim`, a member of every set class except the
/// lifted and jump ones.
pub fn cube(dim: usize, r: i64) -> LatticeSet {
    LatticeSet::from_window(&Window::cube(dim, -r, r).expect("valid cube"))
}

/// `Σ x_i²` on the cube: separable convex, hence in every function class
/// that contains separable functions.
pub fn quadratic(dim: usize, r: i64) -> LatticeFn {
    LatticeFn::from_fn(&cube(dim, r), |x| {
        x.coords().iter().map(|&t| int(t * t)).sum()
    })
    .expect("finite")
}
