use super::{Circuit, CostModel, Gate, GateKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DepthMode {
    /// Greedy earliest-layer schedule of the whole circuit.
    Asap,
    /// Sum of the ASAP depths of the declared segments, with no overlap
    /// between consecutive segments.
    PerPackSum,
}

/// Weighted critical path of `gates`: each gate starts once all its wires are
/// free and then holds every one of them for its full cost.
pub fn asap_depth(gates: &[Gate], num_wires: usize, cost: &CostModel) -> usize {
    let mut free_at = vec![0usize; num_wires];
    let mut depth = 0;
    for gate in gates {
        let start = gate.wires().map(|w| free_at[w]).max().unwrap_or(0);
        let end = start + cost.gate_cost(gate);
        for w in gate.wires() {
            free_at[w] = end;
        }
        depth = depth.max(end);
    }
    depth
}

pub fn circuit_depth(circuit: &Circuit, cost: &CostModel, mode: DepthMode) -> usize {
    match mode {
        DepthMode::Asap => asap_depth(circuit.gates(), circuit.num_wires(), cost),
        DepthMode::PerPackSum => circuit
            .segments()
            .iter()
            .map(|seg| {
                asap_depth(
                    &circuit.gates()[seg.range.clone()],
                    circuit.num_wires(),
                    cost,
                )
            })
            .sum(),
    }
}

/// Wire count plus the largest ancilla demand of any multi-controlled NOT.
pub fn circuit_width(circuit: &Circuit, cost: &CostModel) -> usize {
    let extra = circuit
        .gates()
        .iter()
        .filter(|g| g.kind == GateKind::Mcx)
        .map(|g| cost.eps_w(g.controls.len()))
        .max()
        .unwrap_or(0);
    circuit.num_wires() + extra
}

pub fn circuit_size(circuit: &Circuit) -> usize {
    circuit.len()
}
