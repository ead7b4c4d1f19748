//! Independent ground truth for tests and the verify commands, plus seeded
//! generators for the input classes. Nothing here is used by the solver's
//! decision logic.

mod exact;
mod exhaustive;
mod generate;
mod kuratowski;
mod rng;

pub use exact::{
    chromatic_number, has_clique_of_size, has_independent_set_of_size, max_clique,
    max_independent_set, OracleReport,
};
pub use exhaustive::{enumerate_all_graphs, exhaustive_solve, EXHAUSTIVE_BUDGET};
pub use generate::{generate, GeneratedGraph, GraphClass, GeneratorSpec, GRID};
pub use kuratowski::planarity_oracle;
pub use rng::SeededRng;
