use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{parse_circuit, Circuit, CircuitError, Gate};

/// A named circuit with the reference values it is expected to reproduce.
/// The values are only asserted when `verified` is set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub verified: bool,
    #[serde(default)]
    pub expected_peaks: Option<u64>,
    #[serde(default)]
    pub expected_terms: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(flatten)]
    pub circuit: Circuit,
}

const FIXTURES: &[(&str, &str)] = &[
    ("two_eloop_6e", include_str!("../fixtures/two_eloop_6e.json")),
    ("four_eloop_12e", include_str!("../fixtures/four_eloop_12e.json")),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.0).collect()
}

pub fn parse_fixture(text: &str) -> Result<Fixture, CircuitError> {
    let f: Fixture = serde_json::from_str(text)?;
    f.circuit.validate()?;
    Ok(f)
}

/// Loads a bundled fixture by name, or a fixture file if `name` is a path.
pub fn load_fixture(name: &str) -> Result<Fixture, CircuitError> {
    if let Some((_, text)) = FIXTURES.iter().find(|f| f.0 == name) {
        return parse_fixture(text);
    }
    match std::fs::read_to_string(name) {
        Ok(text) => parse_fixture(&text).or_else(|_| {
            parse_circuit(&text).map(|circuit| Fixture {
                name: name.to_string(),
                verified: false,
                expected_peaks: None,
                expected_terms: BTreeMap::new(),
                note: None,
                circuit,
            })
        }),
        Err(_) => Err(CircuitError::UnknownFixture(name.to_string())),
    }
}

/// An undirected multigraph; edge `i` oriented `a → b` is encoded as bit 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CausalGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CausalGraph {
    /// Every simple cycle as a list of `(edge, bit that orients it forward)`.
    pub fn cycles(&self) -> Vec<Vec<(usize, bool)>> {
        // fundamental cycles of a BFS forest, then every XOR combination that
        // is a single cycle
        let n = self.vertices;
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut depth = vec![0usize; n];
        let mut tree = vec![false; self.edges.len()];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for (i, &(a, b)) in self.edges.iter().enumerate() {
                    let w = if a == u {
                        b
                    } else if b == u {
                        a
                    } else {
                        continue;
                    };
                    if !seen[w] {
                        seen[w] = true;
                        tree[i] = true;
                        parent[w] = Some((u, i));
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let path_to_root = |mut v: usize| {
            let mut m = 0u64;
            while let Some((p, e)) = parent[v] {
                m ^= 1 << e;
                v = p;
            }
            m
        };
        let fundamental: Vec<u64> = (0..self.edges.len())
            .filter(|&i| !tree[i])
            .map(|i| {
                let (a, b) = self.edges[i];
                (1u64 << i) ^ path_to_root(a) ^ path_to_root(b)
            })
            .collect();
        let mut out = Vec::new();
        for subset in 1u64..(1 << fundamental.len()) {
            let mask = (0..fundamental.len()).filter(|&j| subset >> j & 1 == 1).fold(0, |m, j| m ^ fundamental[j]);
            if let Some(c) = self.walk_cycle(mask) {
                out.push(c);
            }
        }
        out
    }

    fn walk_cycle(&self, mask: u64) -> Option<Vec<(usize, bool)>> {
        let ids: Vec<usize> = (0..self.edges.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let mut deg = vec![0; self.vertices];
        for &i in &ids {
            deg[self.edges[i].0] += 1;
            deg[self.edges[i].1] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return None;
        }
        let mut used = vec![false; self.edges.len()];
        let mut cyc = Vec::new();
        let start = ids[0];
        let (mut at, _) = self.edges[start];
        let mut e = start;
        loop {
            used[e] = true;
            let (a, b) = self.edges[e];
            let (next, bit) = if a == at { (b, false) } else { (a, true) };
            cyc.push((e, bit));
            at = next;
            match ids.iter().copied().find(|&j| !used[j] && (self.edges[j].0 == at || self.edges[j].1 == at)) {
                Some(j) => e = j,
                None => break,
            }
        }
        (cyc.len() == ids.len()).then_some(cyc)
    }

    /// Whether the orientation `bits` has no directed cycle.
    pub fn is_acyclic(&self, bits: &[bool]) -> bool {
        self.cycles().iter().all(|c| {
            let fwd = c.iter().all(|&(e, b)| bits[e] == b);
            let bwd = c.iter().all(|&(e, b)| bits[e] != b);
            !fwd && !bwd
        })
    }
}

/// Drops `X` pairs on a qubit that no gate touches in between.
fn cancel_nots(gates: Vec<Gate>) -> Vec<Gate> {
    let mut out: Vec<Option<Gate>> = Vec::with_capacity(gates.len());
    let mut open: BTreeMap<usize, usize> = BTreeMap::new();
    for g in gates {
        if let Gate::X { target } = g {
            if let Some(i) = open.remove(&target) {
                out[i] = None;
                continue;
            }
            open.insert(target, out.len());
        } else {
            for q in g.qubits() {
                open.remove(&q);
            }
        }
        out.push(Some(g));
    }
    out.into_iter().flatten().collect()
}

/// Grover query circuit over the edge orientations of `g`: one ancilla per
/// simple cycle records whether that cycle is directed, and the output qubit
/// (prepared in |−⟩ and restored) takes a phase on orientations with no
/// directed cycle and `fixed` edge at bit 0. The diffusion register is the
/// edge register.
///
/// Layout: edges `0..E`, cycle ancillas `E..E+C`, output `E+C`.
pub fn causal_query_circuit(g: &CausalGraph, fixed: Option<usize>) -> Circuit {
    let cycles = g.cycles();
    let ne = g.edges.len();
    let out = ne + cycles.len();
    let mut gates = Vec::new();
    gates.extend((0..ne).map(|q| Gate::H { target: q }));
    gates.push(Gate::X { target: out });
    gates.push(Gate::H { target: out });
    let mut compute = Vec::new();
    for (k, c) in cycles.iter().enumerate() {
        for dir in [false, true] {
            let flips: Vec<usize> = c.iter().filter(|&&(_, b)| b == dir).map(|&(e, _)| e).collect();
            compute.extend(flips.iter().map(|&q| Gate::X { target: q }));
            let mut controls: Vec<usize> = c.iter().map(|&(e, _)| e).collect();
            controls.sort_unstable();
            compute.push(Gate::Mct { controls, target: ne + k });
            compute.extend(flips.iter().map(|&q| Gate::X { target: q }));
        }
    }
    gates.extend(compute.iter().cloned());
    let mut marks: Vec<usize> = (ne..out).collect();
    marks.extend(fixed);
    gates.extend(marks.iter().map(|&q| Gate::X { target: q }));
    gates.push(Gate::Mct { controls: marks.clone(), target: out });
    gates.extend(marks.iter().map(|&q| Gate::X { target: q }));
    gates.extend(compute.into_iter().rev());
    gates.push(Gate::H { target: out });
    gates.push(Gate::X { target: out });
    Circuit { qubits: out + 1, gates: cancel_nots(gates), diffusion: Some((0..ne).collect()) }
}
