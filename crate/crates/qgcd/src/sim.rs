//! Bit-exact simulation. Every gate in scope permutes computational basis
//! states, so a circuit run is a sequence of classical bit operations.

use thiserror::Error;

use crate::circuit::Circuit;
use crate::gate::{Gate, GateKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("state has {state} bits but the circuit pool has {circuit} qubits")]
    LengthMismatch { state: usize, circuit: usize },
}

/// A classical assignment to every wire in a circuit's pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitState {
    bits: Vec<bool>,
}

impl BitState {
    pub fn zeros(len: usize) -> BitState {
        BitState { bits: vec![false; len] }
    }

    pub fn from_bits(bits: Vec<bool>) -> BitState {
        BitState { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, q: usize) -> bool {
        self.bits[q]
    }

    pub fn set(&mut self, q: usize, v: bool) {
        self.bits[q] = v;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Little-endian read: bit `offset` is the least significant.
    pub fn read_uint(&self, offset: usize, width: usize) -> u64 {
        let mut v = 0u64;
        for i in (0..width).rev() {
            v = (v << 1) | u64::from(self.bits[offset + i]);
        }
        v
    }

    /// Little-endian write of `value` into `width` bits at `offset`.
    pub fn write_uint(&mut self, offset: usize, width: usize, value: u64) {
        for i in 0..width {
            self.bits[offset + i] = (value >> i) & 1 == 1;
        }
    }
}

pub fn apply_gate(gate: &Gate, state: &mut BitState) {
    let fire = gate.controls.iter().all(|c| c.satisfied_by(state.bits[c.qubit]));
    if !fire {
        return;
    }
    match gate.kind {
        GateKind::Not | GateKind::Cnot | GateKind::Toffoli | GateKind::Mcx => {
            let t = gate.targets[0];
            state.bits[t] = !state.bits[t];
        }
        GateKind::Swap | GateKind::Fredkin | GateKind::Mcswap => {
            let (a, b) = (gate.targets[0], gate.targets[1]);
            state.bits.swap(a, b);
        }
    }
}

/// Run `circuit` on `state`. Layers apply in order; gates within a layer are
/// support-disjoint so their order is immaterial.
pub fn apply(circuit: &Circuit, state: &BitState) -> Result<BitState, SimError> {
    if state.len() != circuit.qubit_count() {
        return Err(SimError::LengthMismatch { state: state.len(), circuit: circuit.qubit_count() });
    }
    let mut out = state.clone();
    apply_in_place(circuit, &mut out);
    Ok(out)
}

pub fn apply_in_place(circuit: &Circuit, state: &mut BitState) {
    debug_assert_eq!(state.len(), circuit.qubit_count());
    for layer in circuit.layers() {
        for gate in &layer.gates {
            apply_gate(gate, state);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{AppendMode, Circuit, RegisterMap};
    use crate::gate::Control;

    fn wires(n: usize) -> Circuit {
        let (map, len) = RegisterMap::builder().data("q", n).build();
        Circuit::new(len, map).unwrap()
    }

    #[test]
    fn toffoli_truth_table() {
        let mut c = wires(3);
        c.append_gate(Gate::toffoli(Control::pos(0), Control::pos(1), 2), AppendMode::Pack)
            .unwrap();
        for input in 0..8u64 {
            let mut s = BitState::zeros(3);
            s.write_uint(0, 3, input);
            let out = apply(&c, &s).unwrap().read_uint(0, 3);
            let expect = if input & 0b011 == 0b011 { input ^ 0b100 } else { input };
            assert_eq!(out, expect, "input {input:03b}");
        }
    }

    #[test]
    fn fredkin_with_unset_control_is_identity() {
        let mut c = wires(3);
        c.append_gate(Gate::fredkin(Control::pos(2), 0, 1), AppendMode::Pack).unwrap();
        let mut s = BitState::zeros(3);
        s.set(0, true);
        let out = apply(&c, &s).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn fredkin_decompositions_agree_exhaustively() {
        // Controlled-SWAP as three Toffolis vs one Toffoli and two CNOTs.
        let mut three_toffoli = wires(3);
        for _ in 0..1 {
            three_toffoli
                .append_gate(Gate::toffoli(Control::pos(2), Control::pos(0), 1), AppendMode::NewLayer)
                .unwrap();
            three_toffoli
                .append_gate(Gate::toffoli(Control::pos(2), Control::pos(1), 0), AppendMode::NewLayer)
                .unwrap();
            three_toffoli
                .append_gate(Gate::toffoli(Control::pos(2), Control::pos(0), 1), AppendMode::NewLayer)
                .unwrap();
        }
        let mut cnot_form = wires(3);
        cnot_form.append_gate(Gate::cnot(1, 0), AppendMode::NewLayer).unwrap();
        cnot_form
            .append_gate(Gate::toffoli(Control::pos(2), Control::pos(0), 1), AppendMode::NewLayer)
            .unwrap();
        cnot_form.append_gate(Gate::cnot(1, 0), AppendMode::NewLayer).unwrap();
        let mut native = wires(3);
        native.append_gate(Gate::fredkin(Control::pos(2), 0, 1), AppendMode::Pack).unwrap();
        for input in 0..8u64 {
            let mut s = BitState::zeros(3);
            s.write_uint(0, 3, input);
            let a = apply(&three_toffoli, &s).unwrap();
            let b = apply(&cnot_form, &s).unwrap();
            let c2 = apply(&native, &s).unwrap();
            assert_eq!(a, b, "input {input:03b}");
            assert_eq!(a, c2, "input {input:03b}");
        }
    }

    #[test]
    fn negative_controls_fire_on_zero() {
        let mut c = wires(2);
        c.append_gate(Gate::cnot_ctrl(Control::neg(0), 1), AppendMode::Pack).unwrap();
        let s = BitState::zeros(2);
        let out = apply(&c, &s).unwrap();
        assert!(out.get(1));
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let c = wires(3);
        let s = BitState::zeros(2);
        assert!(apply(&c, &s).is_err());
    }

    #[test]
    fn uint_round_trip_is_little_endian() {
        let mut s = BitState::zeros(8);
        s.write_uint(2, 5, 0b10110);
        assert!(!s.get(2)); // LSB at the register offset
        assert!(s.get(3));
        assert_eq!(s.read_uint(2, 5), 0b10110);
    }
}
