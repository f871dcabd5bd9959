//! Construction of the coin circuit, the shift, and whole walk steps.

mod builder;
mod coins;
mod formulas;
mod shift;
mod step;
mod verify;

pub use builder::{
    ancilla_index_l, build_coin_circuit, build_coin_circuit_optimized, build_generalized_toffoli,
    build_p1, build_p1_bar, build_pack, build_pack_optimized, build_q0, build_q1, build_q10,
    build_q11, build_q2,
};
pub use coins::CoinTable;
pub use formulas::{depth_q0, depth_q10, depth_q11, depth_q2, structural_depth, structural_width};
pub use shift::build_shift_circuit;
pub use step::{build_config_coin_circuit, build_walk_step, WalkConfig};
pub use verify::{coin_circuit_error, subspace_distance, verification_sweep, SweepRow};
