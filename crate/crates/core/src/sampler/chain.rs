use serde::Serialize;

use super::rng::SplitMix64;
use crate::basis::{enumerate_quadratic_moves, try_apply_in_place, MoveSet};
use crate::error::{check_dim, Error, Result};
use crate::graph::{cdeg, Coloring, EdgeVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainConfig {
    pub seed: u64,
    pub steps: u64,
    pub burn_in: u64,
    pub thin: u64,
    /// Hold with probability 1/2 before proposing.
    pub lazy: bool,
    /// Emit only simple states; the chain itself still walks the multigraph fiber.
    pub simple_only: bool,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig {
            seed: 0,
            steps: 10_000,
            burn_in: 0,
            thin: 1,
            lazy: false,
            simple_only: false,
        }
    }
}

impl ChainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.thin == 0 {
            return Err(Error::InvalidConfig("thin must be at least 1".into()));
        }
        if self.burn_in > self.steps {
            return Err(Error::InvalidConfig(format!(
                "burn-in {} exceeds steps {}",
                self.burn_in, self.steps
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ChainState {
    pub current: EdgeVector,
    pub accepted: u64,
    pub rejected: u64,
    pub held: u64,
    pub rng: SplitMix64,
}

impl ChainState {
    pub fn new(start: EdgeVector, seed: u64) -> Result<ChainState> {
        start.require_multigraph()?;
        Ok(ChainState {
            current: start,
            accepted: 0,
            rejected: 0,
            held: 0,
            rng: SplitMix64::new(seed),
        })
    }

    /// Accepted proposals over all proposals; 0 when nothing was proposed.
    pub fn acceptance_rate(&self) -> f64 {
        let proposed = self.accepted + self.rejected;
        if proposed == 0 {
            0.0
        } else {
            self.accepted as f64 / proposed as f64
        }
    }
}

/// One transition. Draws, in order: the hold bit (lazy chains only), the
/// move index, the sign. An infeasible proposal leaves the state in place.
/// Returns whether the state changed.
pub fn step(state: &mut ChainState, moves: &MoveSet, lazy: bool) -> Result<bool> {
    if moves.is_empty() {
        return Err(Error::EmptyMoveSet);
    }
    if lazy && state.rng.bit() {
        state.held += 1;
        return Ok(false);
    }
    let index = state.rng.below(moves.len() as u64) as usize;
    let sign = if state.rng.bit() { -1 } else { 1 };
    if try_apply_in_place(&mut state.current, &moves.moves()[index], sign) {
        state.accepted += 1;
        Ok(true)
    } else {
        state.rejected += 1;
        Ok(false)
    }
}

#[derive(Debug, Clone)]
pub struct ChainRun {
    pub samples: Vec<EdgeVector>,
    pub final_state: EdgeVector,
    pub accepted: u64,
    pub rejected: u64,
    pub held: u64,
}

impl ChainRun {
    pub fn acceptance_rate(&self) -> f64 {
        let proposed = self.accepted + self.rejected;
        if proposed == 0 {
            0.0
        } else {
            self.accepted as f64 / proposed as f64
        }
    }
}

/// Runs the chain from `start` with the quadratic moves of `z`.
pub fn run(start: &EdgeVector, z: &Coloring, config: &ChainConfig) -> Result<ChainRun> {
    run_with_moves(start, &enumerate_quadratic_moves(z), config)
}

/// Runs `config.steps` transitions. After step `t` (1-based) the state is
/// recorded when `t > burn_in` and `(t - burn_in) % thin == 0`.
pub fn run_with_moves(
    start: &EdgeVector,
    moves: &MoveSet,
    config: &ChainConfig,
) -> Result<ChainRun> {
    config.validate()?;
    let z = moves.coloring();
    check_dim(z.n(), start.n())?;
    let mut state = ChainState::new(start.clone(), config.seed)?;
    let label = if cfg!(debug_assertions) {
        Some(cdeg(start, z)?)
    } else {
        None
    };
    let mut samples = Vec::new();
    for t in 1..=config.steps {
        let moved = step(&mut state, moves, config.lazy)?;
        if moved {
            if let Some(label) = &label {
                debug_assert_eq!(&cdeg(&state.current, z)?, label);
            }
        }
        if t > config.burn_in
            && (t - config.burn_in).is_multiple_of(config.thin)
            && (!config.simple_only || state.current.is_simple())
        {
            samples.push(state.current.clone());
        }
    }
    Ok(ChainRun {
        samples,
        final_state: state.current,
        accepted: state.accepted,
        rejected: state.rejected,
        held: state.held,
    })
}
