//! Instance generators with known matching numbers.

mod hard;
mod planted;

pub use hard::{check_index_extremes, wings_are_monotone, HardEdges, HardInstance, IndexExtremes, Block};
pub use planted::gen_random_planted;
