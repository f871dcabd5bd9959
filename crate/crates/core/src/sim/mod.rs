//! Statevector simulation, the circuit-free walk oracle, and position
//! statistics.

mod distribution;
pub mod kernels;
mod oracle;
mod sparse;
mod state;
mod walk;

pub use distribution::{position_distribution, sample, Distribution, Histogram};
pub use oracle::{
    coin_operator_matrix, coin_unitary, direct_walk_oracle, shift_matrix, MAX_ORACLE_MATRIX_N,
};
pub use sparse::{SparseState, MAX_SPARSE_WIRES};
pub use state::{apply_circuit, StateVector, MAX_DENSE_WIRES};
pub use walk::{run_circuit_walk, Backend, AUTO_DENSE_WIRES, LEAK_TOLERANCE};
