//! Regenerates `fixtures/*.json`.
//!
//! Run with `cargo run -p zx-circuits --example gen_fixtures`.

use std::collections::BTreeMap;

use zx_circuits::{causal_query_circuit, CausalGraph, Fixture};

fn theta(offset: usize, a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..3).flat_map(|k| [(a, offset + k), (offset + k, b)]).collect()
}

fn marked(g: &CausalGraph, fixed: usize) -> usize {
    (0u64..1 << g.edges.len())
        .filter(|m| {
            let bits: Vec<bool> = (0..g.edges.len()).map(|i| m >> i & 1 == 1).collect();
            !bits[fixed] && g.is_acyclic(&bits)
        })
        .count()
}

fn main() {
    let two = CausalGraph { vertices: 5, edges: theta(1, 0, 4) };
    let mut four_edges = theta(1, 0, 4);
    four_edges.extend(theta(5, 4, 8));
    let four = CausalGraph { vertices: 9, edges: four_edges };
    let fixtures = [
        Fixture {
            name: "two_eloop_6e".into(),
            verified: false,
            expected_peaks: Some(23),
            expected_terms: BTreeMap::from([("weighted".into(), 48), ("greedy".into(), 52)]),
            note: Some(format!(
                "reconstructed query circuit for the two-loop graph with three two-edge paths; \
                 one ancilla per simple cycle, edge 0 fixed; {} marked orientations",
                marked(&two, 0)
            )),
            circuit: causal_query_circuit(&two, Some(0)),
        },
        Fixture {
            name: "four_eloop_12e".into(),
            verified: false,
            expected_peaks: Some(1199),
            expected_terms: BTreeMap::from([("weighted".into(), 1948), ("greedy".into(), 1810)]),
            note: Some(format!(
                "stand-in: two two-loop graphs joined at a vertex (four loops, twelve edges), \
                 not the reference topology; edge 0 fixed; {} marked orientations",
                marked(&four, 0)
            )),
            circuit: causal_query_circuit(&four, Some(0)),
        },
    ];
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for f in &fixtures {
        let mcts = f.circuit.gates.iter().filter(|g| matches!(g, zx_circuits::Gate::Mct { .. })).count();
        println!(
            "{}: {} qubits, {} gates, {} mct; {}",
            f.name,
            f.circuit.qubits,
            f.circuit.gates.len(),
            mcts,
            f.note.as_deref().unwrap_or("")
        );
        std::fs::write(dir.join(format!("{}.json", f.name)), serde_json::to_string_pretty(f).unwrap() + "\n").unwrap();
    }
}
