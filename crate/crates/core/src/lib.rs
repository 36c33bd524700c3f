//! Stationary connecting cycles of concentric circles.
//!
//! A connecting cycle picks one point on each of `n` concentric circles and
//! joins them in order into a closed polygon. This crate evaluates the
//! perimeter of such cycles on the reduced configuration torus, finds and
//! classifies all of its critical points (with Morse indices, shapes and
//! tangential circles), provides the closed-form constructions for three and
//! four circles, and tracks critical points while one radius varies.

pub mod closed_forms;
pub mod continuation;
pub mod error;
pub mod geometry;
pub mod morse;
pub mod roots;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Circuit, Radii, ReducedConfiguration, Shape, VertexEvent, VertexKind};
pub use solver::{find_all, CriticalCatalogue, CriticalPoint, SolverSettings};
pub use continuation::{sweep, EventKind, SweepBranch, SweepEvent, SweepPlan, SweepResult, SweepSample};
