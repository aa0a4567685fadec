//! Discrete convex sets and functions on the integer lattice.
//!
//! The crate represents finite subsets of Z^n and functions
//! Z^n → Q ∪ {+∞} exactly, decides membership in the standard discrete
//! convexity classes (integral convexity, L/L♮, M/M♮, multimodularity,
//! discrete midpoint convexity, jump systems and jump M/M♮-convexity),
//! and implements the operations that relate them: direct sum, splitting,
//! aggregation, Minkowski sum, convolution and induction through
//! capacitated networks with convex arc costs.
//!
//! The [`lab`] module ties everything together: instance generators for
//! each class, a registry of exact counterexamples, and a harness that
//! rebuilds the closure tables for these operations.

pub mod classes;
pub mod error;
pub mod hull;
pub mod lab;
pub mod lattice;
pub mod network;
pub mod ops;

pub use classes::{check_fn, check_set, witness_points, ClassLabel, Verdict, Witness};
pub use error::{Error, Result};
pub use lattice::{
    int, join_meet, midpoint_round, rat, supports, DMatrix, DTransform, LatticeFn, LatticeSet,
    Point, Rational, Value, Window,
};
