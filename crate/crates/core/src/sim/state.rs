use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::math::{Complex64, ONE, ZERO};

use super::kernels::apply_gate;

/// Largest register the dense simulator will allocate (`2^26` amplitudes,
/// 1 GiB).
pub const MAX_DENSE_WIRES: usize = 26;

const NORM_TOLERANCE: f64 = 1e-10;

/// Dense little-endian state: amplitude `j` belongs to the basis state whose
/// wire `w` holds bit `w` of `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_wires: usize,
    amps: Vec<Complex64>,
}

fn check_wires(num_wires: usize) -> Result<()> {
    if num_wires > MAX_DENSE_WIRES {
        return Err(Error::TooLarge {
            what: "dense state",
            wires: num_wires,
            limit: MAX_DENSE_WIRES,
        });
    }
    Ok(())
}

impl StateVector {
    pub fn zero(num_wires: usize) -> Result<Self> {
        StateVector::basis(num_wires, 0)
    }

    pub fn basis(num_wires: usize, index: usize) -> Result<Self> {
        check_wires(num_wires)?;
        let len = 1usize << num_wires;
        if index >= len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: index,
            });
        }
        let mut amps = vec![ZERO; len];
        amps[index] = ONE;
        Ok(StateVector { num_wires, amps })
    }

    /// Wraps `amps`, whose length must be a power of two and whose norm
    /// must be 1.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if !amps.len().is_power_of_two() {
            return Err(Error::DimensionMismatch {
                expected: amps.len().next_power_of_two(),
                found: amps.len(),
            });
        }
        let num_wires = amps.len().trailing_zeros() as usize;
        check_wires(num_wires)?;
        let state = StateVector { num_wires, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidConfig(format!("state has norm {norm}")));
        }
        Ok(state)
    }

    pub fn num_wires(&self) -> usize {
        self.num_wires
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies every gate of `circuit` in order.
    pub fn apply(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_wires() != self.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: circuit.num_wires(),
            });
        }
        for gate in circuit.gates() {
            apply_gate(&mut self.amps, gate);
        }
        Ok(())
    }

    /// The same state on `num_wires >= self.num_wires()` wires, with the new
    /// high wires in `|0>`.
    pub fn extended(&self, num_wires: usize) -> Result<Self> {
        check_wires(num_wires)?;
        if num_wires < self.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: num_wires,
            });
        }
        let mut amps = vec![ZERO; 1 << num_wires];
        amps[..self.amps.len()].copy_from_slice(&self.amps);
        Ok(StateVector { num_wires, amps })
    }

    /// Probability weight on basis states with any wire at or above
    /// `num_wires` set.
    pub fn weight_above(&self, num_wires: usize) -> f64 {
        self.amps
            .get(1 << num_wires.min(self.num_wires)..)
            .map_or(0.0, |tail| tail.iter().map(|a| a.norm_sqr()).sum())
    }

    /// Drops wires `num_wires..`, keeping only the block where they are all
    /// `|0>`. Callers check [`weight_above`](Self::weight_above) first.
    pub fn truncated(&self, num_wires: usize) -> Result<Self> {
        if num_wires > self.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: num_wires,
            });
        }
        Ok(StateVector {
            num_wires,
            amps: self.amps[..1 << num_wires].to_vec(),
        })
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Functional form of [`StateVector::apply`].
pub fn apply_circuit(mut state: StateVector, circuit: &Circuit) -> Result<StateVector> {
    state.apply(circuit)?;
    Ok(state)
}
