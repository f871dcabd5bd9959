use crate::error::{Error, Result};
use crate::walk::{build_walk_step, WalkConfig};

use super::sparse::SparseState;
use super::state::StateVector;

/// Probability allowed outside the walker space after a step before the run
/// is aborted.
pub const LEAK_TOLERANCE: f64 = 1e-10;

/// Widest register [`Backend::Auto`] simulates densely.
pub const AUTO_DENSE_WIRES: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Dense up to [`AUTO_DENSE_WIRES`], sparse beyond.
    #[default]
    Auto,
    Dense,
    Sparse,
}

impl Backend {
    fn resolve(self, num_wires: usize) -> Backend {
        match self {
            Backend::Auto if num_wires <= AUTO_DENSE_WIRES => Backend::Dense,
            Backend::Auto => Backend::Sparse,
            other => other,
        }
    }
}

/// Runs `config.steps` walk steps through the circuit, starting from the
/// walker state `initial` (`n + 1` wires) with every ancilla in `|0>`.
///
/// After each step the ancillas must be back in `|0>`; otherwise the run
/// stops with [`Error::AncillaLeak`]. Returns the walker state.
pub fn run_circuit_walk(
    config: &WalkConfig,
    initial: &StateVector,
    backend: Backend,
) -> Result<StateVector> {
    let walker = config.n + 1;
    if initial.num_wires() != walker {
        return Err(Error::DimensionMismatch {
            expected: walker,
            found: initial.num_wires(),
        });
    }
    let step = build_walk_step(config)?;
    let wires = step.num_wires();
    let check = |i: usize, leak: f64| {
        if leak > LEAK_TOLERANCE {
            Err(Error::AncillaLeak { step: i + 1, leak })
        } else {
            Ok(())
        }
    };
    match backend.resolve(wires) {
        Backend::Dense => {
            let mut state = initial.extended(wires)?;
            for i in 0..config.steps {
                state.apply(&step)?;
                check(i, state.weight_above(walker))?;
            }
            state.truncated(walker)
        }
        _ => {
            let mut state = SparseState::from_dense(initial, wires)?;
            for i in 0..config.steps {
                state.apply(&step)?;
                check(i, state.weight_above(walker))?;
            }
            state.truncated_dense(walker)
        }
    }
}
