//! The reusable circuit blocks: fixed permutations, shifts, fanout,
//! comparator, nonzero test, conditional swap and conditional subtraction.
//! Each block writes explicit layers into an existing circuit over caller
//! supplied wires, and has a standalone builder that wraps it in a circuit
//! with its own registers for analysis and tests.

mod compare;
mod fanout;
mod nonzero;
mod perm;
mod shift;
mod subtract;
mod swap;

pub use compare::{build_comparator_circuit, emit_comparator};
pub use fanout::{build_fanout_circuit, emit_fanout, emit_unfanout, fanout_layers};
pub use nonzero::{build_is_nonzero_circuit, emit_is_nonzero};
pub use perm::{
    build_permutation_via_ancillae_circuit, decompose_to_transposition_layers,
    emit_permutation_via_ancillae, Permutation,
};
pub use shift::{build_circular_shift_circuit, build_conditional_shift_circuit, emit_circular_shift, emit_conditional_shift};
pub use subtract::{build_conditional_subtract_circuit, emit_conditional_subtract};
pub use swap::{
    build_conditional_swap_circuit, emit_conditional_swap_full, emit_conditional_swap_registers,
};

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError};
use crate::gate::{Control, Gate, GateKind, QubitId};

#[derive(Debug, Error)]
pub enum BlockError {
    #[error("register width mismatch: {context}")]
    WidthMismatch { context: String },
    #[error("workspace too small: need {need} wires, have {have}")]
    WorkspaceTooSmall { need: usize, have: usize },
    #[error("shift offset {offset} out of range for width {width}")]
    OffsetOutOfRange { offset: usize, width: usize },
    #[error("images of length {len} are not a bijection (index {index})")]
    NotBijective { len: usize, index: usize },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

pub(crate) fn push_layers(circuit: &mut Circuit, layers: Vec<Vec<Gate>>) -> Result<(), BlockError> {
    for layer in layers {
        if layer.is_empty() {
            continue;
        }
        circuit.push_layer(layer)?;
    }
    Ok(())
}

/// Greedy earliest-slot scheduler for one phase of gates. Emitted order is
/// preserved across any pair of gates that share a wire, so the layered form
/// computes the same function as the sequential gate list.
pub(crate) fn asap_layers(gates: Vec<Gate>) -> Vec<Vec<Gate>> {
    let mut layers: Vec<Vec<Gate>> = Vec::new();
    let mut frontier: std::collections::HashMap<QubitId, usize> = std::collections::HashMap::new();
    for gate in gates {
        let level = gate
            .support()
            .map(|q| frontier.get(&q).map_or(0, |l| l + 1))
            .max()
            .unwrap_or(0);
        for q in gate.support() {
            frontier.insert(q, level);
        }
        if level == layers.len() {
            layers.push(Vec::new());
        }
        layers[level].push(gate);
    }
    layers
}

/// Reduce a conjunction of controls to a single positive control bit.
/// Returns (compute layers, effective control, uncompute layers). One and
/// two extra conditions use zero or one helper cell from `scratch`.
pub(crate) fn reduce_controls(
    controls: &[Control],
    scratch: &[QubitId],
) -> Result<(Vec<Vec<Gate>>, Control, Vec<Vec<Gate>>), BlockError> {
    match controls.len() {
        0 => Err(BlockError::WidthMismatch { context: "a conditional block needs at least one control".into() }),
        1 => Ok((Vec::new(), controls[0], Vec::new())),
        k => {
            let need = k - 1;
            if scratch.len() < need {
                return Err(BlockError::WorkspaceTooSmall { need, have: scratch.len() });
            }
            let mut layers = Vec::new();
            let mut acc = controls[0];
            for (i, c) in controls[1..].iter().enumerate() {
                let cell = scratch[i];
                layers.push(vec![Gate::toffoli(acc, *c, cell)]);
                acc = Control::pos(cell);
            }
            let mut undo = layers.clone();
            undo.reverse();
            Ok((layers, acc, undo))
        }
    }
}

/// True when the gate list contains anything of Toffoli width or more.
pub(crate) fn layer_has_toffoli(layer: &[Gate]) -> bool {
    layer.iter().any(|g| {
        matches!(
            g.kind,
            GateKind::Toffoli | GateKind::Mcx | GateKind::Fredkin | GateKind::Mcswap
        )
    })
}
