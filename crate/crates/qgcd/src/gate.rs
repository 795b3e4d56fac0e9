//! Reversible gate primitives: NOT/CNOT/Toffoli and their multi-control
//! generalizations, plus the swap family. Controls carry a polarity so a
//! gate can condition on a wire being 0 without explicit NOT sandwiches.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a wire in a circuit's qubit pool.
pub type QubitId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarity {
    /// Condition on the wire carrying 1.
    Positive,
    /// Condition on the wire carrying 0.
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: QubitId,
    pub polarity: Polarity,
}

impl Control {
    pub fn pos(qubit: QubitId) -> Self {
        Control { qubit, polarity: Polarity::Positive }
    }

    pub fn neg(qubit: QubitId) -> Self {
        Control { qubit, polarity: Polarity::Negative }
    }

    /// True when `bit` satisfies this control.
    pub fn satisfied_by(&self, bit: bool) -> bool {
        match self.polarity {
            Polarity::Positive => bit,
            Polarity::Negative => !bit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateKind {
    #[serde(rename = "NOT")]
    Not,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "TOFFOLI")]
    Toffoli,
    #[serde(rename = "MCX")]
    Mcx,
    #[serde(rename = "SWAP")]
    Swap,
    #[serde(rename = "FREDKIN")]
    Fredkin,
    #[serde(rename = "MCSWAP")]
    Mcswap,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
            GateKind::Mcx => "MCX",
            GateKind::Swap => "SWAP",
            GateKind::Fredkin => "FREDKIN",
            GateKind::Mcswap => "MCSWAP",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GateError {
    #[error("{kind} expects {expected} control(s), got {got}")]
    ControlCount { kind: GateKind, expected: String, got: usize },
    #[error("{kind} expects {expected} target(s), got {got}")]
    TargetCount { kind: GateKind, expected: usize, got: usize },
    #[error("gate {kind} touches qubit {qubit} more than once")]
    RepeatedQubit { kind: GateKind, qubit: QubitId },
}

/// One reversible primitive. The X family flips a single target when all
/// controls are satisfied; the swap family exchanges two targets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    pub kind: GateKind,
    pub controls: Vec<Control>,
    pub targets: Vec<QubitId>,
}

impl Gate {
    pub fn new(kind: GateKind, controls: Vec<Control>, targets: Vec<QubitId>) -> Result<Gate, GateError> {
        let g = Gate { kind, controls, targets };
        g.validate()?;
        Ok(g)
    }

    pub fn not(target: QubitId) -> Gate {
        Gate { kind: GateKind::Not, controls: vec![], targets: vec![target] }
    }

    pub fn cnot(control: QubitId, target: QubitId) -> Gate {
        Gate::cnot_ctrl(Control::pos(control), target)
    }

    pub fn cnot_ctrl(control: Control, target: QubitId) -> Gate {
        Gate { kind: GateKind::Cnot, controls: vec![control], targets: vec![target] }
    }

    pub fn toffoli(c1: Control, c2: Control, target: QubitId) -> Gate {
        Gate { kind: GateKind::Toffoli, controls: vec![c1, c2], targets: vec![target] }
    }

    pub fn mcx(controls: Vec<Control>, target: QubitId) -> Gate {
        Gate { kind: GateKind::Mcx, controls, targets: vec![target] }
    }

    pub fn swap(a: QubitId, b: QubitId) -> Gate {
        Gate { kind: GateKind::Swap, controls: vec![], targets: vec![a, b] }
    }

    pub fn fredkin(control: Control, a: QubitId, b: QubitId) -> Gate {
        Gate { kind: GateKind::Fredkin, controls: vec![control], targets: vec![a, b] }
    }

    pub fn mcswap(controls: Vec<Control>, a: QubitId, b: QubitId) -> Gate {
        Gate { kind: GateKind::Mcswap, controls, targets: vec![a, b] }
    }

    pub fn validate(&self) -> Result<(), GateError> {
        let nc = self.controls.len();
        let nt = self.targets.len();
        let (ctl_ok, ctl_expected) = match self.kind {
            GateKind::Not => (nc == 0, "0"),
            GateKind::Cnot => (nc == 1, "1"),
            GateKind::Toffoli => (nc == 2, "2"),
            GateKind::Mcx => (nc >= 3, ">=3"),
            GateKind::Swap => (nc == 0, "0"),
            GateKind::Fredkin => (nc == 1, "1"),
            GateKind::Mcswap => (nc >= 2, ">=2"),
        };
        if !ctl_ok {
            return Err(GateError::ControlCount {
                kind: self.kind,
                expected: ctl_expected.to_string(),
                got: nc,
            });
        }
        let want_targets = match self.kind {
            GateKind::Not | GateKind::Cnot | GateKind::Toffoli | GateKind::Mcx => 1,
            GateKind::Swap | GateKind::Fredkin | GateKind::Mcswap => 2,
        };
        if nt != want_targets {
            return Err(GateError::TargetCount { kind: self.kind, expected: want_targets, got: nt });
        }
        let mut seen = Vec::with_capacity(nc + nt);
        for q in self.support() {
            if seen.contains(&q) {
                return Err(GateError::RepeatedQubit { kind: self.kind, qubit: q });
            }
            seen.push(q);
        }
        Ok(())
    }

    /// Every wire the gate touches, controls first.
    pub fn support(&self) -> impl Iterator<Item = QubitId> + '_ {
        self.controls.iter().map(|c| c.qubit).chain(self.targets.iter().copied())
    }

    pub fn max_qubit(&self) -> QubitId {
        self.support().max().expect("gate touches at least one qubit")
    }

    /// All gates in this class are their own inverse.
    pub fn is_self_inverse(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn control_arity_is_enforced() {
        assert!(Gate::new(GateKind::Cnot, vec![], vec![1]).is_err());
        assert!(Gate::new(GateKind::Toffoli, vec![Control::pos(0)], vec![1]).is_err());
        assert!(Gate::new(GateKind::Mcx, vec![Control::pos(0), Control::pos(1)], vec![2]).is_err());
        assert!(Gate::new(
            GateKind::Mcswap,
            vec![Control::pos(0), Control::neg(1)],
            vec![2, 3]
        )
        .is_ok());
    }

    #[test]
    fn repeated_support_is_rejected() {
        let g = Gate { kind: GateKind::Cnot, controls: vec![Control::pos(3)], targets: vec![3] };
        assert_eq!(g.validate(), Err(GateError::RepeatedQubit { kind: GateKind::Cnot, qubit: 3 }));
        let g = Gate { kind: GateKind::Swap, controls: vec![], targets: vec![2, 2] };
        assert!(g.validate().is_err());
    }

    #[test]
    fn polarity_satisfaction() {
        assert!(Control::pos(0).satisfied_by(true));
        assert!(!Control::pos(0).satisfied_by(false));
        assert!(Control::neg(0).satisfied_by(false));
    }
}
