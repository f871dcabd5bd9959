//! Sparse amplitude propagation for registers too wide to hold densely.
//!
//! The coin circuit keeps a basis input within a handful of basis states, so
//! verification over the correctly initialized subspace only ever touches a
//! few amplitudes even when the register has more than a hundred wires.

use std::collections::BTreeMap;

use crate::circuit::{Circuit, Control, Gate, GateKind};
use crate::error::{Error, Result};
use crate::math::{Complex64, Mat2, ONE};

use super::state::StateVector;

/// Widest register a `u128` key can index.
pub const MAX_SPARSE_WIRES: usize = 128;

/// Amplitudes below this magnitude are dropped after each gate.
const PRUNE: f64 = 1e-16;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseState {
    num_wires: usize,
    amps: BTreeMap<u128, Complex64>,
}

fn satisfied(key: u128, controls: &[Control]) -> bool {
    controls
        .iter()
        .all(|c| ((key >> c.wire) & 1 == 1) == c.is_positive())
}

impl SparseState {
    pub fn basis(num_wires: usize, index: u128) -> Result<Self> {
        if num_wires > MAX_SPARSE_WIRES {
            return Err(Error::TooLarge {
                what: "sparse state",
                wires: num_wires,
                limit: MAX_SPARSE_WIRES,
            });
        }
        if num_wires < 128 && index >> num_wires != 0 {
            return Err(Error::InvalidConfig(format!(
                "basis index {index} needs more than {num_wires} wires"
            )));
        }
        Ok(SparseState {
            num_wires,
            amps: BTreeMap::from([(index, ONE)]),
        })
    }

    /// Sparse copy of a dense state; exact zeros are left out.
    pub fn from_dense(state: &StateVector, num_wires: usize) -> Result<Self> {
        let mut s = SparseState::basis(num_wires, 0)?;
        if num_wires < state.num_wires() {
            return Err(Error::DimensionMismatch {
                expected: state.num_wires(),
                found: num_wires,
            });
        }
        s.amps = state
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() > 0.0)
            .map(|(j, &a)| (j as u128, a))
            .collect();
        Ok(s)
    }

    pub fn num_wires(&self) -> usize {
        self.num_wires
    }

    /// Probability weight on basis states with any wire at or above
    /// `num_wires` set.
    pub fn weight_above(&self, num_wires: usize) -> f64 {
        self.amps
            .range(1u128 << num_wires..)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Dense copy of the block where wires `num_wires..` are all `|0>`.
    pub fn truncated_dense(&self, num_wires: usize) -> Result<StateVector> {
        let len = 1usize << num_wires;
        let mut amps = vec![Complex64::default(); len];
        for (&k, &a) in self.amps.range(..len as u128) {
            amps[k as usize] = a;
        }
        StateVector::from_amplitudes(amps)
    }

    /// Nonzero amplitudes in increasing index order.
    pub fn entries(&self) -> impl Iterator<Item = (u128, Complex64)> + '_ {
        self.amps.iter().map(|(&k, &a)| (k, a))
    }

    pub fn get(&self, index: u128) -> Complex64 {
        self.amps.get(&index).copied().unwrap_or_default()
    }

    pub fn support_len(&self) -> usize {
        self.amps.len()
    }

    pub fn apply(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_wires() != self.num_wires {
            return Err(Error::DimensionMismatch {
                expected: self.num_wires,
                found: circuit.num_wires(),
            });
        }
        for gate in circuit.gates() {
            self.apply_gate(gate);
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: &Gate) {
        match &gate.kind {
            GateKind::Not | GateKind::Mcx => {
                let bit = 1u128 << gate.targets[0];
                self.permute(|k| {
                    if satisfied(k, &gate.controls) {
                        k ^ bit
                    } else {
                        k
                    }
                });
            }
            GateKind::Swap => {
                let (a, b) = (gate.targets[0], gate.targets[1]);
                self.permute(|k| {
                    if satisfied(k, &gate.controls) && ((k >> a) ^ (k >> b)) & 1 == 1 {
                        k ^ (1 << a) ^ (1 << b)
                    } else {
                        k
                    }
                });
            }
            GateKind::Coin(angles) => self.mix(gate.targets[0], &gate.controls, &angles.matrix()),
        }
    }

    fn permute(&mut self, f: impl Fn(u128) -> u128) {
        let old = std::mem::take(&mut self.amps);
        self.amps = old.into_iter().map(|(k, a)| (f(k), a)).collect();
    }

    fn mix(&mut self, target: usize, controls: &[Control], m: &Mat2) {
        let bit = 1u128 << target;
        let old = std::mem::take(&mut self.amps);
        let mut out = BTreeMap::new();
        for (&k, &a) in &old {
            if !satisfied(k, controls) {
                out.insert(k, a);
                continue;
            }
            let base = k & !bit;
            if k & bit != 0 && old.contains_key(&base) {
                continue; // handled together with its partner
            }
            let a0 = old.get(&base).copied().unwrap_or_default();
            let a1 = old.get(&(base | bit)).copied().unwrap_or_default();
            let [[m00, m01], [m10, m11]] = m.0;
            for (key, amp) in [
                (base, m00 * a0 + m01 * a1),
                (base | bit, m10 * a0 + m11 * a1),
            ] {
                if amp.norm() > PRUNE {
                    out.insert(key, amp);
                }
            }
        }
        self.amps = out;
    }
}
