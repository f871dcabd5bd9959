//! Lowering of abstract gates to `{RX, RY, RZ, P, CNOT}`.
//!
//! Multi-controlled NOTs use the borrowed-wire constructions of Barenco et
//! al. (1995): with at least one idle wire the control set is split in two
//! halves around that wire and each half becomes a chain of Toffolis that
//! borrows the other half as scratch, so the cost is linear. A gate that
//! touches every wire falls back to the controlled-root recursion, which is
//! quadratic.

use std::f64::consts::PI;

use crate::circuit::{Circuit, CoinAngles, Control, Gate, GateKind};
use crate::math::Mat2;

use super::basis::{BasisGate, CompiledCircuit};

/// Angles smaller than this are dropped from one-qubit sequences.
const ANGLE_EPS: f64 = 1e-15;

/// Accumulates basis gates in execution order together with the global
/// phase by which the source differs from their product.
#[derive(Clone, Debug, Default)]
pub struct Emitter {
    pub gates: Vec<BasisGate>,
    pub phase: f64,
}

impl Emitter {
    fn push_rotation(&mut self, make: fn(f64, usize) -> BasisGate, angle: f64, wire: usize) {
        if angle.abs() > ANGLE_EPS {
            self.gates.push(make(angle, wire));
        }
    }

    fn rx(&mut self, theta: f64, wire: usize) {
        self.push_rotation(|theta, wire| BasisGate::Rx { theta, wire }, theta, wire);
    }

    fn ry(&mut self, theta: f64, wire: usize) {
        self.push_rotation(|theta, wire| BasisGate::Ry { theta, wire }, theta, wire);
    }

    fn rz(&mut self, lambda: f64, wire: usize) {
        self.push_rotation(|lambda, wire| BasisGate::Rz { lambda, wire }, lambda, wire);
    }

    fn p(&mut self, lambda: f64, wire: usize) {
        self.push_rotation(|lambda, wire| BasisGate::P { lambda, wire }, lambda, wire);
    }

    fn cnot(&mut self, control: usize, target: usize) {
        self.gates.push(BasisGate::Cnot { control, target });
    }

    /// `X = e^{i pi/2} RX(pi)`.
    fn x(&mut self, wire: usize) {
        self.rx(PI, wire);
        self.phase += PI / 2.0;
    }

    /// `H = e^{i pi/2} RY(pi/2) RZ(pi)`.
    fn h(&mut self, wire: usize) {
        self.rz(PI, wire);
        self.ry(PI / 2.0, wire);
        self.phase += PI / 2.0;
    }

    fn t(&mut self, wire: usize) {
        self.p(PI / 4.0, wire);
    }

    fn tdg(&mut self, wire: usize) {
        self.p(-PI / 4.0, wire);
    }

    /// Any one-qubit unitary via its Euler angles.
    fn unitary(&mut self, m: &Mat2, wire: usize) {
        let zyz = m.zyz();
        self.rz(zyz.lambda, wire);
        self.ry(zyz.theta, wire);
        self.rz(zyz.phi, wire);
        self.phase += zyz.phase;
    }

    /// `K(alpha, theta, phi, lambda) = e^{i(alpha + (phi+lambda)/2)} RZ(phi) RY(theta) RZ(lambda)`.
    fn coin(&mut self, a: &CoinAngles, wire: usize) {
        self.rz(a.lambda, wire);
        self.ry(a.theta, wire);
        self.rz(a.phi, wire);
        self.phase += a.alpha + (a.phi + a.lambda) / 2.0;
    }

    /// `|0><0| (x) I + |1><1| (x) U` with the usual `A X B X C` split of
    /// `U = e^{i g} RZ(a) RY(b) RZ(c)`; the phase `g` becomes `P(g)` on the
    /// control.
    fn controlled_unitary(&mut self, m: &Mat2, control: usize, target: usize) {
        let zyz = m.zyz();
        let (a, b, c) = (zyz.phi, zyz.theta, zyz.lambda);
        self.rz((c - a) / 2.0, target);
        self.cnot(control, target);
        self.rz(-(a + c) / 2.0, target);
        self.ry(-b / 2.0, target);
        self.cnot(control, target);
        self.ry(b / 2.0, target);
        self.rz(a, target);
        self.p(zyz.phase, control);
    }

    fn toffoli(&mut self, c1: usize, c2: usize, target: usize) {
        self.h(target);
        self.cnot(c2, target);
        self.tdg(target);
        self.cnot(c1, target);
        self.t(target);
        self.cnot(c2, target);
        self.tdg(target);
        self.cnot(c1, target);
        self.t(c2);
        self.t(target);
        self.h(target);
        self.cnot(c1, c2);
        self.t(c1);
        self.tdg(c2);
        self.cnot(c1, c2);
    }

    /// Multi-controlled NOT with positive controls. `busy` holds every wire
    /// that must not be borrowed; `num_wires` bounds the search for an idle
    /// one.
    fn mcx(&mut self, controls: &[usize], target: usize, num_wires: usize) {
        match controls {
            [] => self.x(target),
            [c] => self.cnot(*c, target),
            [c1, c2] => self.toffoli(*c1, *c2, target),
            _ => {
                let idle = (0..num_wires).find(|w| *w != target && !controls.contains(w));
                match idle {
                    Some(a) => self.mcx_split(controls, target, a),
                    None => self.controlled_root(controls, target, &Mat2::X, num_wires),
                }
            }
        }
    }

    /// `k >= 3` controls, one borrowed wire `a` in any state: the first half
    /// of the controls toggles `a`, the second half plus `a` toggles the
    /// target, twice each.
    fn mcx_split(&mut self, controls: &[usize], target: usize, a: usize) {
        let (first, second) = controls.split_at(controls.len().div_ceil(2));
        let mut second_a = second.to_vec();
        second_a.push(a);
        let mut scratch_for_first = second.to_vec();
        scratch_for_first.push(target);
        for _ in 0..2 {
            self.mcx_chain(first, a, &scratch_for_first);
            self.mcx_chain(&second_a, target, first);
        }
    }

    /// `k` controls with at least `k - 2` borrowed wires in any state, as
    /// `4(k - 2)` Toffolis.
    fn mcx_chain(&mut self, controls: &[usize], target: usize, scratch: &[usize]) {
        let k = controls.len();
        if k <= 2 {
            return self.mcx(controls, target, 0);
        }
        let s = &scratch[..k - 2];
        // Toffoli `i` (2 <= i < k) adds x_i AND s_(i-2) into s_(i-1), or into
        // the target for the last one.
        let step = |e: &mut Self, i: usize| {
            let out = if i == k - 1 { target } else { s[i - 1] };
            e.toffoli(controls[i], s[i - 2], out);
        };
        let base = |e: &mut Self| e.toffoli(controls[0], controls[1], s[0]);
        for pass in 0..2 {
            let top = if pass == 0 { k - 1 } else { k - 2 };
            for i in (2..=top).rev() {
                step(self, i);
            }
            base(self);
            for i in 2..=top {
                step(self, i);
            }
        }
    }

    /// `C^k U` by the controlled-square-root recursion:
    /// `C V (c_k -> t); C^(k-1) X (-> c_k); C V^dg (c_k -> t); C^(k-1) X (-> c_k); C^(k-1) V (-> t)`.
    fn controlled_root(&mut self, controls: &[usize], target: usize, u: &Mat2, num_wires: usize) {
        match controls {
            [] => self.unitary(u, target),
            [c] => self.controlled_unitary(u, *c, target),
            [rest @ .., last] => {
                let v = u.sqrt();
                self.controlled_unitary(&v, *last, target);
                self.mcx(rest, *last, num_wires);
                self.controlled_unitary(&v.adjoint(), *last, target);
                self.mcx(rest, *last, num_wires);
                self.controlled_root(rest, target, &v, num_wires);
            }
        }
    }

    /// Lowers one abstract gate on a register of `num_wires` wires.
    pub fn gate(&mut self, gate: &Gate, num_wires: usize) {
        let negated: Vec<usize> = gate
            .controls
            .iter()
            .filter(|c| !c.is_positive())
            .map(|c| c.wire)
            .collect();
        for &w in &negated {
            self.x(w);
        }
        let controls: Vec<usize> = gate.controls.iter().map(|c| c.wire).collect();
        match (&gate.kind, &gate.targets[..]) {
            (GateKind::Not | GateKind::Mcx, &[t]) => self.mcx(&controls, t, num_wires),
            (GateKind::Coin(a), &[t]) => match &controls[..] {
                [] => self.coin(a, t),
                [c] => self.controlled_unitary(&a.matrix(), *c, t),
                _ => self.controlled_root(&controls, t, &a.matrix(), num_wires),
            },
            (GateKind::Swap, &[a, b]) => {
                if controls.is_empty() {
                    self.cnot(a, b);
                    self.cnot(b, a);
                    self.cnot(a, b);
                } else {
                    let mut with_a = controls.clone();
                    with_a.push(a);
                    self.cnot(b, a);
                    self.mcx(&with_a, b, num_wires);
                    self.cnot(b, a);
                }
            }
            _ => unreachable!("gates are validated on construction"),
        }
        for &w in &negated {
            self.x(w);
        }
    }
}

/// Removes adjacent pairs that multiply to a scalar, where adjacency means no
/// gate in between touches any of the pair's wires. Repeats until stable,
/// since one removal can expose another pair.
pub fn cancel_inverse_pairs(gates: Vec<BasisGate>, num_wires: usize) -> (Vec<BasisGate>, f64) {
    let mut kept: Vec<Option<BasisGate>> = Vec::with_capacity(gates.len());
    let mut last: Vec<Vec<usize>> = vec![Vec::new(); num_wires];
    let mut phase = 0.0;
    for g in gates {
        let wires = g.wires();
        let prev = last[wires[0]].last().copied();
        let partner = prev.filter(|&p| {
            let pg = kept[p].expect("live gate");
            pg.wires() == wires && wires.iter().all(|&w| last[w].last() == Some(&p))
        });
        if let Some(p) = partner {
            if let Some(dphi) = kept[p].expect("live gate").cancels_with(&g) {
                kept[p] = None;
                for &w in &wires {
                    last[w].pop();
                }
                phase += dphi;
                continue;
            }
        }
        for &w in &wires {
            last[w].push(kept.len());
        }
        kept.push(Some(g));
    }
    (kept.into_iter().flatten().collect(), phase)
}

/// Lowers every gate of `circuit` and cancels adjacent inverse pairs.
pub fn compile(circuit: &Circuit) -> CompiledCircuit {
    let num_wires = circuit.num_wires();
    let mut e = Emitter::default();
    for g in circuit.gates() {
        e.gate(g, num_wires);
    }
    let (gates, dphi) = cancel_inverse_pairs(e.gates, num_wires);
    CompiledCircuit {
        num_wires,
        gates,
        phase: e.phase + dphi,
    }
}

/// Basis sequence for `K(alpha, theta, phi, lambda)` on wire 0, with its
/// global phase.
pub fn decompose_1q(angles: &CoinAngles) -> (Vec<BasisGate>, f64) {
    let mut e = Emitter::default();
    e.coin(angles, 0);
    (e.gates, e.phase)
}

/// Basis sequence for the coin on wire 1 controlled by wire 0. Negative
/// controls are expanded by the caller.
pub fn decompose_controlled_1q(angles: &CoinAngles) -> (Vec<BasisGate>, f64) {
    if angles.is_identity() {
        return (vec![], 0.0);
    }
    let mut e = Emitter::default();
    e.controlled_unitary(&angles.matrix(), 0, 1);
    (e.gates, e.phase)
}

/// Basis sequence for a NOT on wire `controls.len()` controlled by wires
/// `0..controls.len()` with the given polarities, using no other wires.
pub fn decompose_mcx(controls: &[Control]) -> CompiledCircuit {
    let target = controls.len();
    let mut c = Circuit::new(target + 1);
    c.push(Gate::mcx(controls.to_vec(), target))
        .expect("valid mcx");
    compile(&c)
}
