use super::gate::{Gate, GateKind};

/// Depth `eps_d(x)` charged for an `x`-controlled Toffoli.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToffoliDepth {
    /// Every multi-controlled NOT counts as one layer.
    Atomic,
    /// `max(1, slope * x + intercept)` for `x >= 2`, and 1 below that.
    Linear { slope: usize, intercept: i64 },
}

impl ToffoliDepth {
    pub fn eval(&self, controls: usize) -> usize {
        match *self {
            ToffoliDepth::Atomic => 1,
            ToffoliDepth::Linear { slope, intercept } => {
                if controls <= 1 {
                    1
                } else {
                    (slope as i64 * controls as i64 + intercept).max(1) as usize
                }
            }
        }
    }
}

/// Extra wires `eps_w(x)` an `x`-controlled Toffoli needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToffoliWidth {
    Zero,
    /// `per_control * (x - 2)` clean ancillas for `x > 2`, as in a V-chain.
    Linear {
        per_control: usize,
    },
}

impl ToffoliWidth {
    pub fn eval(&self, controls: usize) -> usize {
        match *self {
            ToffoliWidth::Zero => 0,
            ToffoliWidth::Linear { per_control } => per_control * controls.saturating_sub(2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CostModel {
    pub swap_cost: usize,
    pub toffoli_depth: ToffoliDepth,
    pub toffoli_width: ToffoliWidth,
}

impl CostModel {
    /// Every gate costs one layer except SWAPs, which cost 3.
    pub fn atomic() -> Self {
        CostModel {
            swap_cost: 3,
            toffoli_depth: ToffoliDepth::Atomic,
            toffoli_width: ToffoliWidth::Zero,
        }
    }

    /// Ancilla-free linear-depth Toffolis: `eps_d(x) = max(1, 8x - 6)`.
    pub fn linear() -> Self {
        CostModel {
            swap_cost: 3,
            toffoli_depth: ToffoliDepth::Linear {
                slope: 8,
                intercept: -6,
            },
            toffoli_width: ToffoliWidth::Zero,
        }
    }

    pub fn eps_d(&self, controls: usize) -> usize {
        self.toffoli_depth.eval(controls)
    }

    pub fn eps_w(&self, controls: usize) -> usize {
        self.toffoli_width.eval(controls)
    }

    /// Number of layers `gate` occupies on each of its wires.
    pub fn gate_cost(&self, gate: &Gate) -> usize {
        match gate.kind {
            GateKind::Not | GateKind::Coin(_) => 1,
            GateKind::Swap => self.swap_cost,
            GateKind::Mcx => self.eps_d(gate.controls.len()),
        }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel::linear()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toffoli_depth_floor() {
        for model in [CostModel::atomic(), CostModel::linear()] {
            assert_eq!(model.eps_d(0), 1);
            assert_eq!(model.eps_d(1), 1);
            for x in 0..20 {
                assert!(model.eps_d(x) >= 1);
            }
        }
        assert_eq!(CostModel::linear().eps_d(2), 10);
        assert_eq!(CostModel::linear().eps_d(5), 34);
    }

    #[test]
    fn swap_counts_three() {
        assert_eq!(CostModel::atomic().gate_cost(&Gate::swap(0, 1)), 3);
        assert_eq!(CostModel::atomic().gate_cost(&Gate::cswap(2, 0, 1)), 3);
    }
}
