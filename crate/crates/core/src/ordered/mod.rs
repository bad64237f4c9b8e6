//! Forbidden-structure detectors on ordered and cyclically ordered graphs.

mod cherry;
mod crossing;
pub(crate) mod ktt;
mod pattern;
mod split;

pub use cherry::{exists_crossing_sequence, is_double_cherry, CrossingRule};
pub use crossing::{max_pairwise_crossing, CrossingFamily};
pub use ktt::{find_complete_bipartite, KttSearch, KttWitness};
pub use pattern::{find_ordered_pattern, h0, h1, PatternGraph};
pub use split::{bipartite_split, BipartiteSplit, Side};
