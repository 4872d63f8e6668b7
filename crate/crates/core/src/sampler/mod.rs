//! The switch chain on multigraph fibers.

mod chain;
mod diagnostic;
mod rng;

pub use chain::{run, run_with_moves, step, ChainConfig, ChainRun, ChainState};
pub use diagnostic::{uniformity_diagnostic, UniformityReport};
pub use rng::SplitMix64;
