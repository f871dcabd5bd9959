//! Circuits that apply a position-dependent coin to a discrete-time quantum
//! walk on a cycle of `2^n` sites, with depth traded for width through the
//! pack exponent `m`.
//!
//! * [`circuit`] — gate IR, register layout, depth/width analysis, text form.
//! * [`walk`] — builders for the coin circuit, its sub-operators, the shift
//!   and full walk steps, plus closed-form costs.
//! * [`sim`] — dense statevector simulation, the circuit-free oracle and
//!   position statistics.
//! * [`compile`] — lowering to `{RX, RY, RZ, P, CNOT}`.
//!
//! Wire convention: position bit `b_p` is wire `p`, the principal coin `s_0`
//! is wire `n`, ancillary coins `s_k` follow, then ancillary positions
//! `b'_k`. Basis index bit `w` is the value of wire `w`.

pub mod circuit;
pub mod compile;
pub mod error;
pub mod math;
pub mod sim;
pub mod walk;

pub use circuit::{
    circuit_depth, circuit_size, circuit_unitary, circuit_width, Circuit, CoinAngles, Control,
    CostModel, DepthMode, Gate, GateKind, Polarity, WireLayout,
};
pub use compile::{compile, compiled_metrics, BasisGate, CompiledCircuit, CompiledMetrics};
pub use error::{Error, Result};
pub use sim::{Distribution, Histogram, StateVector};
pub use walk::{CoinTable, WalkConfig};
