//! Layered circuit representation. A circuit owns a fixed qubit pool that is
//! fully partitioned into named registers; gates are grouped into layers of
//! pairwise wire-disjoint gates so depth is the layer count.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gate::{Gate, GateError, QubitId};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Layer {
    pub gates: Vec<Gate>,
}

impl Layer {
    pub fn new(gates: Vec<Gate>) -> Layer {
        Layer { gates }
    }

    /// True when `gate`'s support is disjoint from every gate already here.
    pub fn accepts(&self, gate: &Gate) -> bool {
        self.gates
            .iter()
            .all(|g| g.support().all(|q| gate.support().all(|p| p != q)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Register {
    pub offset: QubitId,
    pub width: usize,
    /// Ancilla registers must enter and leave computations all-zero; their
    /// widths are what the resource report counts as ancillae.
    pub is_ancilla: bool,
}

impl Register {
    pub fn wires(&self) -> impl Iterator<Item = QubitId> {
        self.offset..self.offset + self.width
    }

    pub fn wire(&self, i: usize) -> QubitId {
        debug_assert!(i < self.width);
        self.offset + i
    }
}

/// Named, non-overlapping qubit ranges covering the whole pool.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RegisterMap {
    entries: BTreeMap<String, Register>,
}

impl RegisterMap {
    pub fn new() -> RegisterMap {
        RegisterMap::default()
    }

    /// Convenience builder: registers are laid out contiguously in call order.
    pub fn builder() -> RegisterMapBuilder {
        RegisterMapBuilder { map: RegisterMap::new(), next: 0 }
    }

    pub fn insert(&mut self, name: &str, offset: QubitId, width: usize, is_ancilla: bool) {
        self.entries.insert(name.to_string(), Register { offset, width, is_ancilla });
    }

    pub fn get(&self, name: &str) -> Option<&Register> {
        self.entries.get(name)
    }

    pub fn reg(&self, name: &str) -> &Register {
        self.entries
            .get(name)
            .unwrap_or_else(|| panic!("unknown register {name:?}"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Register)> {
        self.entries.iter()
    }

    pub fn ancilla_width(&self) -> usize {
        self.entries.values().filter(|r| r.is_ancilla).map(|r| r.width).sum()
    }

    pub fn ancilla_wires(&self) -> Vec<QubitId> {
        let mut v: Vec<QubitId> = self
            .entries
            .values()
            .filter(|r| r.is_ancilla)
            .flat_map(|r| r.wires())
            .collect();
        v.sort_unstable();
        v
    }

    /// Ranges must be pairwise disjoint and tile [0, qubit_count) exactly.
    pub fn validate(&self, qubit_count: usize) -> Result<(), CircuitError> {
        let mut owner: Vec<Option<&str>> = vec![None; qubit_count];
        for (name, reg) in &self.entries {
            if reg.width == 0 {
                return Err(CircuitError::EmptyRegister { name: name.clone() });
            }
            for q in reg.wires() {
                if q >= qubit_count {
                    return Err(CircuitError::RegisterOutOfRange { name: name.clone(), qubit: q });
                }
                if let Some(other) = owner[q] {
                    return Err(CircuitError::RegisterOverlap {
                        first: other.to_string(),
                        second: name.clone(),
                        qubit: q,
                    });
                }
                owner[q] = Some(name);
            }
        }
        if let Some(q) = owner.iter().position(|o| o.is_none()) {
            return Err(CircuitError::UncoveredQubit { qubit: q });
        }
        Ok(())
    }
}

pub struct RegisterMapBuilder {
    map: RegisterMap,
    next: QubitId,
}

impl RegisterMapBuilder {
    pub fn data(mut self, name: &str, width: usize) -> Self {
        self.map.insert(name, self.next, width, false);
        self.next += width;
        self
    }

    pub fn ancilla(mut self, name: &str, width: usize) -> Self {
        self.map.insert(name, self.next, width, true);
        self.next += width;
        self
    }

    pub fn qubit_count(&self) -> usize {
        self.next
    }

    pub fn build(self) -> (RegisterMap, usize) {
        let n = self.next;
        (self.map, n)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("register {name} is empty")]
    EmptyRegister { name: String },
    #[error("register {name} reaches qubit {qubit}, outside the pool")]
    RegisterOutOfRange { name: String, qubit: QubitId },
    #[error("registers {first} and {second} overlap at qubit {qubit}")]
    RegisterOverlap { first: String, second: String, qubit: QubitId },
    #[error("qubit {qubit} belongs to no register")]
    UncoveredQubit { qubit: QubitId },
    #[error("gate references qubit {qubit} but the pool has {qubit_count} qubits")]
    QubitOutOfRange { qubit: QubitId, qubit_count: usize },
    #[error(transparent)]
    Gate(#[from] GateError),
    #[error("layer {layer} contains gates with overlapping supports")]
    LayerConflict { layer: usize },
    #[error("cannot compose circuits over different pools ({left} vs {right} qubits)")]
    PoolMismatch { left: usize, right: usize },
    #[error("cannot compose circuits with different register maps")]
    RegisterMismatch,
}

/// How `append_gate` chooses a layer for the new gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AppendMode {
    /// Scan backward over layers whose gates are all disjoint from the new
    /// gate and place it in the earliest such layer; stop at the first
    /// conflicting layer. Falls back to a fresh layer.
    Pack,
    /// Always open a fresh layer.
    NewLayer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    qubit_count: usize,
    registers: RegisterMap,
    layers: Vec<Layer>,
}

/// A layer-disjointness violation found by `validate_layers`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerViolation {
    pub layer: usize,
    pub first_gate: usize,
    pub second_gate: usize,
    pub qubit: QubitId,
}

impl Circuit {
    pub fn new(qubit_count: usize, registers: RegisterMap) -> Result<Circuit, CircuitError> {
        registers.validate(qubit_count)?;
        Ok(Circuit { qubit_count, registers, layers: Vec::new() })
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn registers(&self) -> &RegisterMap {
        &self.registers
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn gate_count(&self) -> usize {
        self.layers.iter().map(|l| l.gates.len()).sum()
    }

    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.layers.iter().flat_map(|l| l.gates.iter())
    }

    fn check_gate(&self, gate: &Gate) -> Result<(), CircuitError> {
        gate.validate()?;
        let q = gate.max_qubit();
        if q >= self.qubit_count {
            return Err(CircuitError::QubitOutOfRange { qubit: q, qubit_count: self.qubit_count });
        }
        Ok(())
    }

    pub fn append_gate(&mut self, gate: Gate, mode: AppendMode) -> Result<(), CircuitError> {
        self.check_gate(&gate)?;
        match mode {
            AppendMode::NewLayer => self.layers.push(Layer::new(vec![gate])),
            AppendMode::Pack => {
                let mut slot = None;
                for (i, layer) in self.layers.iter().enumerate().rev() {
                    if layer.accepts(&gate) {
                        slot = Some(i);
                    } else {
                        break;
                    }
                }
                match slot {
                    Some(i) => self.layers[i].gates.push(gate),
                    None => self.layers.push(Layer::new(vec![gate])),
                }
            }
        }
        Ok(())
    }

    /// Append a whole layer, verifying internal disjointness.
    pub fn push_layer(&mut self, gates: Vec<Gate>) -> Result<(), CircuitError> {
        let mut layer = Layer::default();
        for g in gates {
            self.check_gate(&g)?;
            if !layer.accepts(&g) {
                return Err(CircuitError::LayerConflict { layer: self.layers.len() });
            }
            layer.gates.push(g);
        }
        self.layers.push(layer);
        Ok(())
    }

    /// Concatenate layers of `second` after `self`; no cross-boundary
    /// repacking, so depths add deterministically.
    pub fn compose(&self, second: &Circuit) -> Result<Circuit, CircuitError> {
        if self.qubit_count != second.qubit_count {
            return Err(CircuitError::PoolMismatch { left: self.qubit_count, right: second.qubit_count });
        }
        if self.registers != second.registers {
            return Err(CircuitError::RegisterMismatch);
        }
        let mut out = self.clone();
        out.layers.extend(second.layers.iter().cloned());
        Ok(out)
    }

    pub fn extend(&mut self, second: &Circuit) -> Result<(), CircuitError> {
        if self.qubit_count != second.qubit_count {
            return Err(CircuitError::PoolMismatch { left: self.qubit_count, right: second.qubit_count });
        }
        if self.registers != second.registers {
            return Err(CircuitError::RegisterMismatch);
        }
        self.layers.extend(second.layers.iter().cloned());
        Ok(())
    }

    /// Layers reversed; every gate in this class is self-inverse so the gates
    /// themselves are unchanged.
    pub fn inverse(&self) -> Circuit {
        let mut out = self.clone();
        out.layers.reverse();
        out
    }

    /// Every (layer, gate pair) sharing a wire. Empty means the parallel
    /// execution rule holds everywhere.
    pub fn validate_layers(&self) -> Vec<LayerViolation> {
        let mut violations = Vec::new();
        for (li, layer) in self.layers.iter().enumerate() {
            for i in 0..layer.gates.len() {
                for j in i + 1..layer.gates.len() {
                    let shared = layer.gates[i]
                        .support()
                        .find(|q| layer.gates[j].support().any(|p| p == *q));
                    if let Some(q) = shared {
                        violations.push(LayerViolation {
                            layer: li,
                            first_gate: i,
                            second_gate: j,
                            qubit: q,
                        });
                    }
                }
            }
        }
        violations
    }
}
