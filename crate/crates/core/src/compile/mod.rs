//! Lowering to the universal gate set `{RX, RY, RZ, P, CNOT}` and metrics of
//! the result.

mod basis;
mod lower;
mod metrics;

pub use basis::{BasisGate, CompiledCircuit};
pub use lower::{
    cancel_inverse_pairs, compile, decompose_1q, decompose_controlled_1q, decompose_mcx,
};
pub use metrics::{compiled_metrics, metrics_of, CompiledMetrics};
