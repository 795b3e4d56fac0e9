//! Gate/depth census after canonical decomposition of compound gates.
//!
//! Counting rules:
//!   SWAP       -> 3 CNOT
//!   FREDKIN    -> 2 CNOT + 1 Toffoli
//!   MCX(m>=3)  -> pairwise AND tree over the m controls into m-1 workspace
//!                 cells (m-1 Toffolis), one CNOT from the tree root to the
//!                 target, then the tree uncomputed: 2(m-1) Toffoli + 1 CNOT
//!   MCSWAP(m)  -> the same tree plus one FREDKIN at the root:
//!                 2(m-1)+1 Toffoli + 2 CNOT
//!
//! Negative controls are native in the IR; they lower to NOT sandwiches only
//! at export and do not change the census.
//!
//! The depth pair expands each layer into the sub-layers of its decomposed
//! gates (a FREDKIN layer is CNOT/Toffoli/CNOT, so it adds 2 to the CNOT
//! depth and 1 to the Toffoli depth). A sub-layer counts toward the Toffoli
//! depth if any decomposed gate in it is Toffoli or wider, else toward the
//! CNOT depth; `total_depth` stays the plain layer count.

use crate::circuit::Circuit;
use crate::gate::{Gate, GateKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ResourceReport {
    pub not_count: usize,
    pub cnot_count: usize,
    pub toffoli_count: usize,
    pub cnot_depth: usize,
    pub toffoli_depth: usize,
    pub total_depth: usize,
    pub ancillae: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SubLayerClass {
    CnotLike,
    ToffoliLike,
}

/// Per-gate decomposition: counts plus the class sequence of its sub-layers.
fn decompose(gate: &Gate) -> (usize, usize, usize, Vec<SubLayerClass>) {
    use SubLayerClass::*;
    match gate.kind {
        GateKind::Not => (1, 0, 0, vec![CnotLike]),
        GateKind::Cnot => (0, 1, 0, vec![CnotLike]),
        GateKind::Toffoli => (0, 0, 1, vec![ToffoliLike]),
        GateKind::Swap => (0, 3, 0, vec![CnotLike; 3]),
        GateKind::Fredkin => (0, 2, 1, vec![CnotLike, ToffoliLike, CnotLike]),
        GateKind::Mcx => {
            let m = gate.controls.len();
            let tree_depth = m.next_power_of_two().trailing_zeros() as usize;
            let mut subs = vec![ToffoliLike; tree_depth];
            subs.push(CnotLike);
            subs.extend(vec![ToffoliLike; tree_depth]);
            (0, 1, 2 * (m - 1), subs)
        }
        GateKind::Mcswap => {
            let m = gate.controls.len();
            let tree_depth = m.next_power_of_two().trailing_zeros() as usize;
            let mut subs = vec![ToffoliLike; tree_depth];
            subs.extend([CnotLike, ToffoliLike, CnotLike]);
            subs.extend(vec![ToffoliLike; tree_depth]);
            (0, 2, 2 * (m - 1) + 1, subs)
        }
    }
}

pub fn resource_report(circuit: &Circuit) -> ResourceReport {
    let mut report = ResourceReport {
        total_depth: circuit.depth(),
        ancillae: circuit.registers().ancilla_width(),
        ..ResourceReport::default()
    };
    for layer in circuit.layers() {
        let mut sublayers: Vec<SubLayerClass> = Vec::new();
        for gate in &layer.gates {
            let (nots, cnots, toffolis, subs) = decompose(gate);
            report.not_count += nots;
            report.cnot_count += cnots;
            report.toffoli_count += toffolis;
            for (i, class) in subs.into_iter().enumerate() {
                if i < sublayers.len() {
                    if class == SubLayerClass::ToffoliLike {
                        sublayers[i] = SubLayerClass::ToffoliLike;
                    }
                } else {
                    sublayers.push(class);
                }
            }
        }
        for class in sublayers {
            match class {
                SubLayerClass::CnotLike => report.cnot_depth += 1,
                SubLayerClass::ToffoliLike => report.toffoli_depth += 1,
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{AppendMode, Circuit, RegisterMap};
    use crate::gate::Control;

    fn pool(widths: &[(&str, usize, bool)]) -> Circuit {
        let mut b = RegisterMap::builder();
        for (name, w, anc) in widths {
            b = if *anc { b.ancilla(name, *w) } else { b.data(name, *w) };
        }
        let (map, n) = b.build();
        Circuit::new(n, map).unwrap()
    }

    #[test]
    fn empty_circuit_reports_zero() {
        let c = pool(&[("A", 4, false), ("B", 4, false)]);
        assert_eq!(resource_report(&c), ResourceReport::default());
    }

    #[test]
    fn fredkin_layer_decomposes_to_two_cnot_one_toffoli() {
        let mut c = pool(&[("q", 3, false)]);
        c.append_gate(Gate::fredkin(Control::pos(2), 0, 1), AppendMode::Pack).unwrap();
        let r = resource_report(&c);
        assert_eq!((r.cnot_count, r.toffoli_count), (2, 1));
        assert_eq!((r.cnot_depth, r.toffoli_depth, r.total_depth), (2, 1, 1));
    }

    #[test]
    fn swap_layers_count_cnots() {
        // 1-bit circular shift structure on 8 wires: 7 SWAPs in 2 layers.
        let mut c = pool(&[("q", 8, false)]);
        c.push_layer(vec![
            Gate::swap(0, 1),
            Gate::swap(2, 7),
            Gate::swap(3, 6),
            Gate::swap(4, 5),
        ])
        .unwrap();
        c.push_layer(vec![Gate::swap(0, 2), Gate::swap(3, 7), Gate::swap(4, 6)]).unwrap();
        let r = resource_report(&c);
        assert_eq!((r.cnot_count, r.toffoli_count), (21, 0));
        assert_eq!(r.total_depth, 2);
        assert_eq!(r.cnot_depth, 6);
        assert_eq!(r.toffoli_depth, 0);
    }

    #[test]
    fn mcx_census_follows_the_ladder() {
        let mut c = pool(&[("q", 6, false)]);
        let controls = vec![Control::pos(0), Control::pos(1), Control::neg(2), Control::pos(3)];
        c.append_gate(Gate::mcx(controls, 4), AppendMode::Pack).unwrap();
        let r = resource_report(&c);
        assert_eq!(r.toffoli_count, 6); // 2*(4-1)
        assert_eq!(r.cnot_count, 1);
        assert_eq!(r.toffoli_depth, 4); // tree down+up, depth 2 each
        assert_eq!(r.cnot_depth, 1);
    }

    #[test]
    fn mixed_layer_classifies_sublayers() {
        // A Fredkin plus a CNOT riding in the same layer: the CNOT lives in
        // the first sub-layer, so the pair stays [2 CNOT-like; 1 Toffoli-like].
        let mut c = pool(&[("q", 5, false)]);
        c.push_layer(vec![Gate::fredkin(Control::pos(2), 0, 1), Gate::cnot(3, 4)]).unwrap();
        let r = resource_report(&c);
        assert_eq!((r.cnot_depth, r.toffoli_depth, r.total_depth), (2, 1, 1));
        assert_eq!(r.cnot_count, 3);
    }

    #[test]
    fn reports_add_under_compose() {
        let mut a = pool(&[("q", 4, true)]);
        a.append_gate(Gate::cnot(0, 1), AppendMode::Pack).unwrap();
        a.append_gate(Gate::toffoli(Control::pos(0), Control::pos(1), 2), AppendMode::NewLayer)
            .unwrap();
        let b = a.clone();
        let ab = a.compose(&b).unwrap();
        let (ra, rb, rab) = (resource_report(&a), resource_report(&b), resource_report(&ab));
        assert_eq!(rab.cnot_count, ra.cnot_count + rb.cnot_count);
        assert_eq!(rab.toffoli_count, ra.toffoli_count + rb.toffoli_count);
        assert_eq!(rab.total_depth, ra.total_depth + rb.total_depth);
        assert_eq!(rab.cnot_depth, ra.cnot_depth + rb.cnot_depth);
        assert_eq!(rab.toffoli_depth, ra.toffoli_depth + rb.toffoli_depth);
        assert_eq!(rab.ancillae, ra.ancillae);
    }
}
