//! JSON circuit format:
//!
//! ```text
//! {"qubits": n,
//!  "registers": {"A": [offset, width], ...},
//!  "layers": [[{"kind": "CNOT", "controls": [[0, "+"]], "targets": [1]}, ...], ...]}
//! ```
//!
//! The format round-trips losslessly on its canonical form: registers are
//! sorted by name and objects use a fixed field order, so
//! `export(import(export(c)))` is byte-identical to `export(c)`.
//!
//! Register ancilla flags are not part of the wire format; they follow the
//! naming convention used throughout this crate: a register named `w` or
//! starting with `w_` is an ancilla (workspace) register.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, RegisterMap};
use crate::gate::{Control, Gate, GateKind, Polarity};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed circuit JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid circuit: {0}")]
    Circuit(#[from] CircuitError),
    #[error("control polarity must be \"+\" or \"-\", got {0:?}")]
    BadPolarity(String),
}

/// Naming convention for ancilla registers in serialized circuits.
pub fn ancilla_by_name(name: &str) -> bool {
    name == "w" || name.starts_with("w_")
}

#[derive(Serialize, Deserialize)]
struct CircuitJson {
    qubits: usize,
    registers: BTreeMap<String, (usize, usize)>,
    layers: Vec<Vec<GateJson>>,
}

#[derive(Serialize, Deserialize)]
struct GateJson {
    kind: GateKind,
    controls: Vec<(usize, String)>,
    targets: Vec<usize>,
}

pub fn to_json(circuit: &Circuit) -> String {
    let registers = circuit
        .registers()
        .iter()
        .map(|(name, reg)| (name.clone(), (reg.offset, reg.width)))
        .collect();
    let layers = circuit
        .layers()
        .iter()
        .map(|layer| {
            layer
                .gates
                .iter()
                .map(|g| GateJson {
                    kind: g.kind,
                    controls: g
                        .controls
                        .iter()
                        .map(|c| {
                            let p = match c.polarity {
                                Polarity::Positive => "+",
                                Polarity::Negative => "-",
                            };
                            (c.qubit, p.to_string())
                        })
                        .collect(),
                    targets: g.targets.clone(),
                })
                .collect()
        })
        .collect();
    let doc = CircuitJson { qubits: circuit.qubit_count(), registers, layers };
    serde_json::to_string(&doc).expect("circuit JSON serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Circuit, JsonError> {
    let doc: CircuitJson = serde_json::from_str(text)?;
    let mut map = RegisterMap::new();
    for (name, (offset, width)) in &doc.registers {
        map.insert(name, *offset, *width, ancilla_by_name(name));
    }
    let mut circuit = Circuit::new(doc.qubits, map)?;
    for layer in doc.layers {
        let mut gates = Vec::with_capacity(layer.len());
        for g in layer {
            let mut controls = Vec::with_capacity(g.controls.len());
            for (qubit, pol) in g.controls {
                let polarity = match pol.as_str() {
                    "+" => Polarity::Positive,
                    "-" => Polarity::Negative,
                    other => return Err(JsonError::BadPolarity(other.to_string())),
                };
                controls.push(Control { qubit, polarity });
            }
            gates.push(Gate::new(g.kind, controls, g.targets).map_err(CircuitError::from)?);
        }
        circuit.push_layer(gates)?;
    }
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{AppendMode, RegisterMap};

    #[test]
    fn round_trip_is_byte_identical() {
        let (map, n) = RegisterMap::builder().data("A", 2).data("B", 1).ancilla("w", 2).build();
        let mut c = Circuit::new(n, map).unwrap();
        c.append_gate(Gate::cnot(0, 1), AppendMode::Pack).unwrap();
        c.append_gate(Gate::toffoli(Control::neg(0), Control::pos(2), 3), AppendMode::NewLayer)
            .unwrap();
        c.append_gate(Gate::fredkin(Control::pos(2), 0, 1), AppendMode::NewLayer).unwrap();
        let text = to_json(&c);
        let parsed = from_json(&text).unwrap();
        assert_eq!(parsed, c);
        assert_eq!(to_json(&parsed), text);
    }

    #[test]
    fn ancilla_flag_follows_naming_convention() {
        let (map, n) = RegisterMap::builder().data("A", 1).ancilla("w_scratch", 3).build();
        let c = Circuit::new(n, map).unwrap();
        let parsed = from_json(&to_json(&c)).unwrap();
        assert_eq!(parsed.registers().reg("w_scratch").is_ancilla, true);
        assert_eq!(parsed.registers().reg("A").is_ancilla, false);
    }

    #[test]
    fn bad_polarity_is_rejected() {
        let text = r#"{"qubits":2,"registers":{"A":[0,2]},"layers":[[{"kind":"CNOT","controls":[[0,"x"]],"targets":[1]}]]}"#;
        assert!(matches!(from_json(text), Err(JsonError::BadPolarity(_))));
    }

    #[test]
    fn overlapping_layer_is_rejected() {
        let text = r#"{"qubits":2,"registers":{"A":[0,2]},"layers":[[{"kind":"NOT","controls":[],"targets":[0]},{"kind":"NOT","controls":[],"targets":[0]}]]}"#;
        assert!(from_json(text).is_err());
    }
}
