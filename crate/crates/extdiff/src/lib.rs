//! Extended set difference of planar compact convex sets.
//!
//! The Minkowski sum `A ⊕ B` has no inverse in general: for most pairs there is
//! no convex `X` with `B ⊕ X = A`. This crate computes the *extended* set
//! difference instead — the minimizers of the Hausdorff distance
//! `d_H(A, B ⊕ X)` over compact convex `X` — by sampling support functions on a
//! uniform net of directions, solving a linear program that enforces discrete
//! sublinearity, and reconstructing `X` from the optimal support values.
//!
//! Modules map onto the pipeline:
//!
//! - [`geometry`] — exact planar convex kernel: canonical polygons, support
//!   functions, Minkowski sums, Hausdorff distance, inscribed/circumscribed
//!   radii, rigid transforms.
//! - [`net`] — uniform direction nets on the unit circle, sampled support
//!   vectors, the midpoint-direction index map, nearest-neighbor extension.
//! - [`lp`] — self-contained two-phase simplex solver (dense basis algebra,
//!   Dantzig pricing with a Bland anti-cycling fallback, deterministic).
//! - [`diff`] — assembles and solves the difference LP, reconstructs `X`,
//!   computes diagnostics; closed forms for intervals and balls.
//! - [`refine`] — selects a unique minimizer from the LP's optimal face by a
//!   strictly convex penalty (two-stage scheme and explicit gamma sweeps), and
//!   orbit-averaging for symmetric inputs.
//! - [`cli`] — command-line entry points, JSON file formats, SVG rendering and
//!   the randomized property-check runner.
//!
//! The `extdiff` binary exposes the pipeline as `diff`, `interval`, `ball` and
//! `check` subcommands; the `examples/` directory holds one runnable example
//! per capability.

pub mod cli;
pub mod diff;
pub mod geometry;
pub mod lp;
pub mod net;
pub mod refine;

pub use diff::{extended_difference, DifferenceOptions, DifferenceSolution};
pub use geometry::{Ball2, ConvexPolygon, Interval1, Point2};
pub use net::{build_net, DirectionNet, SupportVector};
