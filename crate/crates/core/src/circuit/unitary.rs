use super::Circuit;
use crate::error::{Error, Result};
use crate::math::{Complex64, Matrix, ONE, ZERO};
use crate::sim::kernels::apply_gate;

/// Largest circuit whose full matrix we are willing to build.
pub const MAX_UNITARY_WIRES: usize = 12;

/// Full matrix of `circuit`: column `k` is the circuit applied to `|k>`, with
/// wire `w` carrying bit `2^w` of the index.
///
/// All columns are evolved at once: the column-major matrix is a state on
/// `2w` wires whose upper half (the column index) no gate touches.
pub fn circuit_unitary(circuit: &Circuit) -> Result<Matrix> {
    let w = circuit.num_wires();
    if w > MAX_UNITARY_WIRES {
        return Err(Error::TooLarge {
            what: "unitary extraction",
            wires: w,
            limit: MAX_UNITARY_WIRES,
        });
    }
    let mut amps = identity_columns(w);
    for gate in circuit.gates() {
        apply_gate(&mut amps, gate);
    }
    let dim = 1usize << w;
    Ok(Matrix::from_vec(dim, dim, amps))
}

/// The identity on `w` wires, column-major.
pub(crate) fn identity_columns(w: usize) -> Vec<Complex64> {
    let dim = 1usize << w;
    let mut amps = vec![ZERO; dim * dim];
    for k in 0..dim {
        amps[k + dim * k] = ONE;
    }
    amps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{CoinAngles, Gate};
    use crate::math::{max_abs_diff, unitarity_defect};

    #[test]
    fn not_matrix() {
        let mut c = Circuit::new(1);
        c.push(Gate::not(0)).unwrap();
        let u = circuit_unitary(&c).unwrap();
        let x = Matrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]);
        assert_eq!(u, x);
    }

    #[test]
    fn empty_is_identity() {
        let u = circuit_unitary(&Circuit::new(2)).unwrap();
        assert_eq!(u, Matrix::identity(4, 4));
    }

    #[test]
    fn swap_permutes_01_and_10() {
        let mut c = Circuit::new(2);
        c.push(Gate::swap(0, 1)).unwrap();
        let u = circuit_unitary(&c).unwrap();
        // brute force: swap bits of each basis index
        let mut expect = Matrix::zeros(4, 4);
        for k in 0..4usize {
            let swapped = ((k & 1) << 1) | ((k >> 1) & 1);
            expect[(swapped, k)] = ONE;
        }
        assert_eq!(u, expect);
        assert_eq!(u[(0b10, 0b01)], ONE);
    }

    #[test]
    fn coin_inverse_composes_to_identity() {
        let a = CoinAngles::new(0.7, 2.1, -1.2, 0.4);
        let mut c = Circuit::new(1);
        c.push(Gate::coin(a, 0)).unwrap();
        let mut both = c.clone();
        both.append(&c.inverse()).unwrap();
        let u = circuit_unitary(&both).unwrap();
        assert!(max_abs_diff(&u, &Matrix::identity(2, 2)) < 1e-12);
        let single = circuit_unitary(&c).unwrap();
        let inv = circuit_unitary(&c.inverse()).unwrap();
        assert!(max_abs_diff(&inv, &single.adjoint()) < 1e-12);
        assert!(unitarity_defect(&single) < 1e-12);
    }

    #[test]
    fn refuses_large_circuits() {
        let c = Circuit::new(13);
        assert!(matches!(circuit_unitary(&c), Err(Error::TooLarge { .. })));
    }
}
