//! Colorings, pair-indexed vectors, statistics and the design matrix.

mod coloring;
mod design;
mod edges;
mod pairs;
mod stats;

pub use coloring::Coloring;
pub use design::{design_matrix, is_monomial_walk, walk_from_brackets, DesignMatrix};
pub use edges::EdgeVector;
pub use pairs::{
    all_pairs, color_pair_rank, color_pair_unrank, num_color_pairs, num_pairs, pair_rank,
    pair_unrank, PairIndex,
};
pub use stats::{cdeg, pos_neg_colors, pos_neg_degrees, CDegSequence};
