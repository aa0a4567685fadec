//! Exact lattice arithmetic: points, values in Q ∪ {+∞}, windows, finite
//! (optionally lifted) sets and functions, and the multimodular change of
//! variables.

mod dmatrix;
mod func;
mod point;
mod set;
mod value;
mod window;

pub use dmatrix::{DMatrix, DTransform};
pub use func::LatticeFn;
pub use point::{join_meet, midpoint_round, supports, Point};
pub use set::LatticeSet;
pub use value::{holds_ge, int, rat, Rational, Value};
pub use window::{BoxIter, Window};
