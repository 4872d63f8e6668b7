//! Colored multigraph fibers: switches, sampling, and Gröbner reduction
//! for the degree-color design matrix.
//!
//! Vertices and colors are 0-based throughout the library. The text formats
//! in [`format`] are 1-based.

pub mod basis;
pub mod counting;
pub mod error;
pub mod fiber;
pub mod format;
pub mod graph;
pub mod groebner;
pub mod sampler;

pub use basis::{enumerate_quadratic_moves, Move, MoveSet};
pub use error::{Error, Result};
pub use fiber::{enumerate_fiber, fiber_graph, EnumerationLimits, Fiber, FiberGraph};
pub use graph::{
    cdeg, design_matrix, is_monomial_walk, walk_from_brackets, CDegSequence, Coloring,
    DesignMatrix, EdgeVector, PairIndex,
};
