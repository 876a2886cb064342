//! Exact `CountDistinct` under two space/time tradeoffs.

mod canonical;
mod pathset;

pub use canonical::CanonicalIndex;
pub use pathset::{decompose_path_sets, PathSet, PathSetFamily, PathSetIndex};
