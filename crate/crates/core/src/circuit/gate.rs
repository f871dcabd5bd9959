use std::fmt;

use crate::error::{Error, Result};
use crate::math::Mat2;

/// Angles `(alpha, theta, phi, lambda)` of a coin operator, in radians.
#[derive(Clone, Copy, Debug, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct CoinAngles {
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
    pub lambda: f64,
}

impl CoinAngles {
    pub const IDENTITY: CoinAngles = CoinAngles {
        alpha: 0.0,
        theta: 0.0,
        phi: 0.0,
        lambda: 0.0,
    };

    pub fn new(alpha: f64, theta: f64, phi: f64, lambda: f64) -> Self {
        CoinAngles {
            alpha,
            theta,
            phi,
            lambda,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.alpha.is_finite()
            && self.theta.is_finite()
            && self.phi.is_finite()
            && self.lambda.is_finite()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Parameters of the adjoint coin: `K(a,t,p,l)^dagger = K(-a,-t,-l,-p)`.
    pub fn adjoint(&self) -> Self {
        CoinAngles::new(-self.alpha, -self.theta, -self.lambda, -self.phi)
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::coin(self.alpha, self.theta, self.phi, self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Active when the control wire is `|1>`.
    Positive,
    /// Active when the control wire is `|0>`.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Control {
    pub wire: usize,
    pub polarity: Polarity,
}

impl Control {
    pub fn pos(wire: usize) -> Self {
        Control {
            wire,
            polarity: Polarity::Positive,
        }
    }

    pub fn neg(wire: usize) -> Self {
        Control {
            wire,
            polarity: Polarity::Negative,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.polarity == Polarity::Positive
    }
}

impl fmt::Display for Control {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_positive() { '+' } else { '-' };
        write!(f, "{sign}{}", self.wire)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateKind {
    /// Bit flip with at most one control (NOT or CNOT).
    Not,
    /// Coin operator `K(alpha, theta, phi, lambda)`, optionally controlled.
    Coin(CoinAngles),
    /// Exchange of two wires, optionally controlled.
    Swap,
    /// Multi-controlled NOT. Its depth is priced by the cost model.
    Mcx,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Not => "not",
            GateKind::Coin(_) => "coin",
            GateKind::Swap => "swap",
            GateKind::Mcx => "mcx",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
}

impl Gate {
    pub fn not(target: usize) -> Self {
        Gate {
            kind: GateKind::Not,
            targets: vec![target],
            controls: vec![],
        }
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate {
            kind: GateKind::Not,
            targets: vec![target],
            controls: vec![Control::pos(control)],
        }
    }

    pub fn coin(angles: CoinAngles, target: usize) -> Self {
        Gate {
            kind: GateKind::Coin(angles),
            targets: vec![target],
            controls: vec![],
        }
    }

    pub fn controlled_coin(control: usize, angles: CoinAngles, target: usize) -> Self {
        Gate {
            kind: GateKind::Coin(angles),
            targets: vec![target],
            controls: vec![Control::pos(control)],
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate {
            kind: GateKind::Swap,
            targets: vec![a, b],
            controls: vec![],
        }
    }

    pub fn cswap(control: usize, a: usize, b: usize) -> Self {
        Gate {
            kind: GateKind::Swap,
            targets: vec![a, b],
            controls: vec![Control::pos(control)],
        }
    }

    pub fn mcx(controls: Vec<Control>, target: usize) -> Self {
        Gate {
            kind: GateKind::Mcx,
            targets: vec![target],
            controls,
        }
    }

    /// All wires the gate touches, targets first.
    pub fn wires(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets
            .iter()
            .copied()
            .chain(self.controls.iter().map(|c| c.wire))
    }

    pub fn validate(&self, num_wires: usize) -> Result<()> {
        let expected_targets = match self.kind {
            GateKind::Swap => 2,
            _ => 1,
        };
        if self.targets.len() != expected_targets {
            return Err(Error::InvalidGate(format!(
                "{} takes {expected_targets} target(s), got {}",
                self.kind.name(),
                self.targets.len()
            )));
        }
        if self.kind == GateKind::Not && self.controls.len() > 1 {
            return Err(Error::InvalidGate(
                "not takes at most one control; use mcx".into(),
            ));
        }
        if let GateKind::Coin(a) = self.kind {
            if !a.is_finite() {
                return Err(Error::InvalidGate("coin angles must be finite".into()));
            }
        }
        let mut seen = Vec::with_capacity(self.targets.len() + self.controls.len());
        for w in self.wires() {
            if w >= num_wires {
                return Err(Error::WireOutOfRange {
                    wire: w,
                    wires: num_wires,
                });
            }
            if seen.contains(&w) {
                return Err(Error::InvalidGate(format!(
                    "wire {w} used twice by one {}",
                    self.kind.name()
                )));
            }
            seen.push(w);
        }
        Ok(())
    }

    pub fn inverse(&self) -> Gate {
        let kind = match self.kind {
            GateKind::Coin(a) => GateKind::Coin(a.adjoint()),
            k => k,
        };
        Gate {
            kind,
            targets: self.targets.clone(),
            controls: self.controls.clone(),
        }
    }

    /// Same gate with every wire `w` replaced by `map[w]`.
    pub fn relabeled(&self, map: &[usize]) -> Gate {
        Gate {
            kind: self.kind,
            targets: self.targets.iter().map(|&t| map[t]).collect(),
            controls: self
                .controls
                .iter()
                .map(|c| Control {
                    wire: map[c.wire],
                    polarity: c.polarity,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_overlaps_and_arity() {
        assert!(Gate::cnot(1, 1).validate(2).is_err());
        assert!(Gate::swap(0, 2).validate(2).is_err());
        let bad_swap = Gate {
            kind: GateKind::Swap,
            targets: vec![0],
            controls: vec![],
        };
        assert!(bad_swap.validate(2).is_err());
        let two_ctrl_not = Gate {
            kind: GateKind::Not,
            targets: vec![0],
            controls: vec![Control::pos(1), Control::pos(2)],
        };
        assert!(two_ctrl_not.validate(3).is_err());
        let nan = Gate::coin(CoinAngles::new(f64::NAN, 0.0, 0.0, 0.0), 0);
        assert!(nan.validate(1).is_err());
        assert!(Gate::mcx(vec![Control::pos(0), Control::neg(1)], 2)
            .validate(3)
            .is_ok());
    }

    #[test]
    fn coin_adjoint_inverts_matrix() {
        let a = CoinAngles::new(0.3, 1.2, -0.8, 2.1);
        let prod = a.matrix() * a.adjoint().matrix();
        assert!(prod.max_abs_diff(&Mat2::IDENTITY) < 1e-14);
    }
}
