use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::circuit::text::{parse_document, write_header, GateLine, Item};
use crate::circuit::{identity_columns, Control, MAX_UNITARY_WIRES};
use crate::error::{Error, Result};
use crate::math::{cis, Mat2, Matrix};
use crate::sim::kernels::{apply_mat2, apply_x};

/// Angle sums this close to a multiple of `2 pi` count as a full turn when
/// cancelling adjacent rotations.
const TURN_TOLERANCE: f64 = 1e-12;

/// The universal gate set the compiler targets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BasisGate {
    Rx { theta: f64, wire: usize },
    Ry { theta: f64, wire: usize },
    Rz { lambda: f64, wire: usize },
    P { lambda: f64, wire: usize },
    Cnot { control: usize, target: usize },
}

impl BasisGate {
    pub fn name(&self) -> &'static str {
        match self {
            BasisGate::Rx { .. } => "rx",
            BasisGate::Ry { .. } => "ry",
            BasisGate::Rz { .. } => "rz",
            BasisGate::P { .. } => "p",
            BasisGate::Cnot { .. } => "cnot",
        }
    }

    pub fn wires(&self) -> Vec<usize> {
        match *self {
            BasisGate::Rx { wire, .. }
            | BasisGate::Ry { wire, .. }
            | BasisGate::Rz { wire, .. }
            | BasisGate::P { wire, .. } => vec![wire],
            BasisGate::Cnot { control, target } => vec![control, target],
        }
    }

    /// The 2x2 matrix of a one-qubit gate; `None` for CNOT.
    pub fn matrix(&self) -> Option<Mat2> {
        match *self {
            BasisGate::Rx { theta, .. } => Some(Mat2::rx(theta)),
            BasisGate::Ry { theta, .. } => Some(Mat2::ry(theta)),
            BasisGate::Rz { lambda, .. } => Some(Mat2::rz(lambda)),
            BasisGate::P { lambda, .. } => Some(Mat2::phase(lambda)),
            BasisGate::Cnot { .. } => None,
        }
    }

    /// If `self` followed by `next` multiplies to a scalar `e^{i phase}`,
    /// returns that phase.
    pub fn cancels_with(&self, next: &BasisGate) -> Option<f64> {
        // R(a) R(b) = R(a + b), and R(2 pi k) = (-1)^k I.
        let rotation = |a: f64, b: f64, period: f64, phase_per_turn: f64| {
            let turns = (a + b) / period;
            let k = turns.round();
            ((turns - k).abs() * period < TURN_TOLERANCE).then_some(k * phase_per_turn)
        };
        match (*self, *next) {
            (BasisGate::Rx { theta: a, wire: w }, BasisGate::Rx { theta: b, wire: v })
            | (BasisGate::Ry { theta: a, wire: w }, BasisGate::Ry { theta: b, wire: v })
            | (BasisGate::Rz { lambda: a, wire: w }, BasisGate::Rz { lambda: b, wire: v })
                if w == v =>
            {
                rotation(a, b, 2.0 * PI, PI)
            }
            (BasisGate::P { lambda: a, wire: w }, BasisGate::P { lambda: b, wire: v })
                if w == v =>
            {
                rotation(a, b, 2.0 * PI, 0.0)
            }
            (
                BasisGate::Cnot {
                    control: c,
                    target: t,
                },
                BasisGate::Cnot {
                    control: d,
                    target: u,
                },
            ) if c == d && t == u => Some(0.0),
            _ => None,
        }
    }

    fn line(&self) -> GateLine {
        let (targets, controls, params) = match *self {
            BasisGate::Rx { theta: x, wire }
            | BasisGate::Ry { theta: x, wire }
            | BasisGate::Rz { lambda: x, wire }
            | BasisGate::P { lambda: x, wire } => (vec![wire], vec![], vec![x]),
            BasisGate::Cnot { control, target } => {
                (vec![target], vec![Control::pos(control)], vec![])
            }
        };
        GateLine {
            kind: self.name().to_string(),
            targets,
            controls,
            params,
        }
    }

    fn from_line(line: &GateLine) -> Result<Self> {
        let bad = || Error::InvalidGate(format!("not a basis gate: {line}"));
        match (
            line.kind.as_str(),
            &line.targets[..],
            &line.controls[..],
            &line.params[..],
        ) {
            ("rx", &[wire], [], &[theta]) => Ok(BasisGate::Rx { theta, wire }),
            ("ry", &[wire], [], &[theta]) => Ok(BasisGate::Ry { theta, wire }),
            ("rz", &[wire], [], &[lambda]) => Ok(BasisGate::Rz { lambda, wire }),
            ("p", &[wire], [], &[lambda]) => Ok(BasisGate::P { lambda, wire }),
            ("cnot", &[target], &[c], []) if c.is_positive() => Ok(BasisGate::Cnot {
                control: c.wire,
                target,
            }),
            _ => Err(bad()),
        }
    }
}

/// A circuit over [`BasisGate`]s. Its action is `e^{i phase}` times the
/// product of its gates, so the phase bookkeeping of the lowering is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct CompiledCircuit {
    pub num_wires: usize,
    pub gates: Vec<BasisGate>,
    pub phase: f64,
}

impl CompiledCircuit {
    /// Applies the gates (and the global phase) to a dense amplitude array.
    pub fn apply(&self, amps: &mut [crate::math::Complex64]) {
        for g in &self.gates {
            match *g {
                BasisGate::Cnot { control, target } => {
                    apply_x(amps, target, &[Control::pos(control)])
                }
                _ => apply_mat2(
                    amps,
                    g.wires()[0],
                    &[],
                    &g.matrix().expect("one-qubit gate"),
                ),
            }
        }
        let phase = cis(self.phase);
        for a in amps.iter_mut() {
            *a *= phase;
        }
    }

    pub fn unitary(&self) -> Result<Matrix> {
        if self.num_wires > MAX_UNITARY_WIRES {
            return Err(Error::TooLarge {
                what: "unitary",
                wires: self.num_wires,
                limit: MAX_UNITARY_WIRES,
            });
        }
        let mut amps = identity_columns(self.num_wires);
        self.apply(&mut amps);
        let dim = 1usize << self.num_wires;
        Ok(Matrix::from_vec(dim, dim, amps))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_header(&mut out, self.num_wires, None);
        let _ = writeln!(out, "phase {}", self.phase);
        for g in &self.gates {
            let _ = writeln!(out, "{}", g.line());
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let doc = parse_document(text)?;
        let gates = doc
            .items
            .iter()
            .filter_map(|item| match item {
                Item::Gate(line) => Some(BasisGate::from_line(line)),
                Item::Segment(_) => None,
            })
            .collect::<Result<Vec<_>>>()?;
        for g in &gates {
            if let Some(&w) = g.wires().iter().find(|&&w| w >= doc.wires) {
                return Err(Error::WireOutOfRange {
                    wire: w,
                    wires: doc.wires,
                });
            }
        }
        Ok(CompiledCircuit {
            num_wires: doc.wires,
            gates,
            phase: doc.phase.unwrap_or(0.0),
        })
    }
}
