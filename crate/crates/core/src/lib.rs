//! Finding `k`-vertex induced subgraphs with a hereditary property `Π` in
//! graphs drawn from another hereditary class `Π_G`.
//!
//! - [`graph`]: immutable bit-row graphs and the constructions used
//!   throughout (complement, join, strong product, `t·K_c`);
//! - [`format`]: graph6 and edge-list text formats;
//! - [`properties`]: recognizers and [`PropertyDescriptor`]s;
//! - [`ramsey`]: binomial Ramsey bounds and cutoffs;
//! - [`solver`]: the Ramsey-cutoff dispatcher plus brute-force and
//!   pattern-matching engines;
//! - [`reductions`]: independent set to `Π` reductions by strong product and
//!   by join, with witness translation in both directions;
//! - [`oracle`]: exact ground truth and seeded class generators.

mod bits;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod properties;
pub mod ramsey;
pub mod reductions;
pub mod search;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
pub use properties::{PropertyClass, PropertyDescriptor};
pub use solver::{solve, Answer, Branch, ProblemInstance, SolveOutcome};
