//! The walk without circuits: coin, shift and their product acting directly
//! on the `n + 1` walker wires (positions on wires `0..n`, the coin on wire
//! `n`), so a walker basis index is `k + 2^n * coin`.

use crate::error::{Error, Result};
use crate::math::{Complex64, Mat2, Matrix, ONE, ZERO};
use crate::walk::CoinTable;

use super::state::StateVector;

/// Largest `n` for which the dense oracle matrices are built.
pub const MAX_ORACLE_MATRIX_N: usize = 10;

/// `e^{i alpha} [[cos t, -e^{i lambda} sin t], [e^{i phi} sin t, e^{i(phi+lambda)} cos t]]`
/// with `t = theta / 2`.
pub fn coin_unitary(alpha: f64, theta: f64, phi: f64, lambda: f64) -> Mat2 {
    Mat2::coin(alpha, theta, phi, lambda)
}

fn check_matrix_n(n: usize) -> Result<()> {
    if n > MAX_ORACLE_MATRIX_N {
        return Err(Error::TooLarge {
            what: "oracle matrix",
            wires: n + 1,
            limit: MAX_ORACLE_MATRIX_N + 1,
        });
    }
    Ok(())
}

/// Block-diagonal `sum_k |k><k| (x) C_k`.
pub fn coin_operator_matrix(n: usize, coins: &CoinTable) -> Result<Matrix> {
    check_matrix_n(n)?;
    if coins.n() != n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            found: coins.len(),
        });
    }
    let half = 1usize << n;
    let mut u = Matrix::from_element(2 * half, 2 * half, ZERO);
    for k in 0..half {
        let c = coins.matrix(k);
        for (r, row) in c.0.iter().enumerate() {
            for (s, &v) in row.iter().enumerate() {
                u[(k + r * half, k + s * half)] = v;
            }
        }
    }
    Ok(u)
}

/// Where the shift sends walker basis index `j`.
fn shifted_index(n: usize, j: usize) -> usize {
    let half = 1usize << n;
    let (k, coin) = (j % half, j / half);
    let k = if coin == 0 {
        (k + half - 1) % half
    } else {
        (k + 1) % half
    };
    k + coin * half
}

/// Permutation matrix of the coin-conditioned shift: coin 0 moves to
/// `k - 1 mod 2^n`, coin 1 to `k + 1 mod 2^n`.
pub fn shift_matrix(n: usize) -> Result<Matrix> {
    check_matrix_n(n)?;
    let dim = 2usize << n;
    let mut s = Matrix::from_element(dim, dim, ZERO);
    for j in 0..dim {
        s[(shifted_index(n, j), j)] = ONE;
    }
    Ok(s)
}

/// One application of the coin then the shift, as structured operations.
fn oracle_step(n: usize, coins: &CoinTable, amps: &[Complex64]) -> Vec<Complex64> {
    let half = 1usize << n;
    let mut out = vec![ZERO; amps.len()];
    for k in 0..half {
        let [[c00, c01], [c10, c11]] = coins.matrix(k).0;
        let (a0, a1) = (amps[k], amps[k + half]);
        out[shifted_index(n, k)] = c00 * a0 + c01 * a1;
        out[shifted_index(n, k + half)] = c10 * a0 + c11 * a1;
    }
    out
}

/// `(S C)^steps |initial>` on the walker wires alone.
pub fn direct_walk_oracle(
    n: usize,
    coins: &CoinTable,
    steps: usize,
    initial: &StateVector,
) -> Result<StateVector> {
    if initial.num_wires() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: initial.num_wires(),
        });
    }
    if coins.n() != n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            found: coins.len(),
        });
    }
    let mut amps = initial.amplitudes().to_vec();
    for _ in 0..steps {
        amps = oracle_step(n, coins, &amps);
    }
    StateVector::from_amplitudes(amps)
}
