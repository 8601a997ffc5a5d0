//! Decides accessibility and controllability of bilinear control systems
//! evolving on SO(n), SL(n) and GL+(n) from the sparsity pattern of the
//! system matrices, and cross-validates every graphical verdict against an
//! exact Lie-algebra rank computation over big rationals.
//!
//! The crate is organized around four layers:
//!
//! * [`lie`]: canonical bases of so(n), sl(n), gl(n); sparse exact vectors;
//!   structure-constant brackets; generated-subalgebra closure and rank.
//! * [`graph`]: interaction graphs and the two closure operators that mirror
//!   bracketing on the graph side (two-path shortcutting and pair rewiring).
//! * [`system`]: the bilinear system model, its interaction graphs, the
//!   valid-edge drift decomposition, and the `.sys` text format.
//! * [`criteria`]: the decision procedures, the rank-condition oracle, and a
//!   randomized cross-validation campaign ([`fuzz`]).

pub mod criteria;
pub mod fuzz;
pub mod graph;
pub mod lie;
pub mod system;
pub mod systems;

pub use lie::{
    lie_closure, Algebra, BasisElement, Coeff, Family, LieError, LieVector, SubalgebraBasis,
};
