//! Checks of the coin circuit on correctly initialized inputs: basis states
//! that are arbitrary on the walker wires and `|0>` on every ancilla.

use rayon::prelude::*;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::SparseState;

use super::builder::{build_coin_circuit, build_coin_circuit_optimized};
use super::coins::CoinTable;

fn walker_wires(circuit: &Circuit) -> Result<usize> {
    circuit
        .layout()
        .map(|l| l.n() + 1)
        .ok_or_else(|| Error::InvalidLayout("circuit has no walk layout".into()))
}

/// Largest amplitude difference between `circuit` applied to each walker
/// basis state (ancillas `|0>`) and the coin operator `sum_k |k><k| (x) C_k`
/// applied to the same state. Any amplitude left on an ancilla counts as
/// error.
pub fn coin_circuit_error(circuit: &Circuit, coins: &CoinTable) -> Result<f64> {
    let walker = walker_wires(circuit)?;
    let n = walker - 1;
    if coins.n() != n {
        return Err(Error::InvalidCoins(format!(
            "coin table is for n={}, circuit for n={n}",
            coins.n()
        )));
    }
    let half = 1usize << n;
    (0..2 * half)
        .into_par_iter()
        .map(|j| {
            let mut state = SparseState::basis(circuit.num_wires(), j as u128)?;
            state.apply(circuit)?;
            let (k, s) = (j % half, j / half);
            let c = coins.matrix(k);
            let expected = [(k as u128, c.0[0][s]), ((k + half) as u128, c.0[1][s])];
            let mut err: f64 = expected
                .iter()
                .map(|&(idx, amp)| (state.get(idx) - amp).norm())
                .fold(0.0, f64::max);
            for (idx, amp) in state.entries() {
                if expected.iter().all(|&(e, _)| e != idx) {
                    err = err.max(amp.norm());
                }
            }
            Ok(err)
        })
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}

/// Largest amplitude difference between two circuits over walker basis
/// inputs with ancillas in `|0>`.
pub fn subspace_distance(a: &Circuit, b: &Circuit) -> Result<f64> {
    let walker = walker_wires(a)?;
    if a.num_wires() != b.num_wires() {
        return Err(Error::DimensionMismatch {
            expected: a.num_wires(),
            found: b.num_wires(),
        });
    }
    (0..1usize << walker)
        .into_par_iter()
        .map(|j| {
            let mut sa = SparseState::basis(a.num_wires(), j as u128)?;
            let mut sb = sa.clone();
            sa.apply(a)?;
            sb.apply(b)?;
            let one_sided = |x: &SparseState, y: &SparseState| {
                x.entries()
                    .map(|(idx, amp)| (amp - y.get(idx)).norm())
                    .fold(0.0, f64::max)
            };
            Ok(one_sided(&sa, &sb).max(one_sided(&sb, &sa)))
        })
        .try_reduce(|| 0.0, |x, y| Ok(x.max(y)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// [`coin_circuit_error`] of the plain circuit.
    pub error: f64,
    /// [`coin_circuit_error`] of the NOT-reduced circuit.
    pub optimized_error: f64,
}

/// Correctness check for every `1 <= n <= n_max`, `0 <= m <= n` and seed,
/// with coins from [`CoinTable::random`].
pub fn verification_sweep(n_max: usize, seeds: &[u64]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for m in 0..=n {
            for &seed in seeds {
                let coins = CoinTable::random(n, seed);
                rows.push(SweepRow {
                    n,
                    m,
                    seed,
                    error: coin_circuit_error(&build_coin_circuit(n, m, &coins)?, &coins)?,
                    optimized_error: coin_circuit_error(
                        &build_coin_circuit_optimized(n, m, &coins)?,
                        &coins,
                    )?,
                });
            }
        }
    }
    Ok(rows)
}
