use serde::Serialize;

use crate::circuit::Circuit;

use super::basis::CompiledCircuit;
use super::lower::compile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompiledMetrics {
    pub depth: usize,
    pub width: usize,
    pub size: usize,
}

/// Unit-cost ASAP depth, wire count and gate count of a compiled circuit.
pub fn metrics_of(compiled: &CompiledCircuit) -> CompiledMetrics {
    let mut ready = vec![0usize; compiled.num_wires];
    let mut depth = 0;
    for g in &compiled.gates {
        let wires = g.wires();
        let layer = wires.iter().map(|&w| ready[w]).max().unwrap_or(0) + 1;
        for w in wires {
            ready[w] = layer;
        }
        depth = depth.max(layer);
    }
    CompiledMetrics {
        depth,
        width: compiled.num_wires,
        size: compiled.gates.len(),
    }
}

pub fn compiled_metrics(circuit: &Circuit) -> CompiledMetrics {
    metrics_of(&compile(circuit))
}
