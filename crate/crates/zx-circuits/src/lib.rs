//! Circuits over {X, H, CNOT, multi-controlled Toffoli}, their translation
//! into ZX diagrams with star edges, Grover diffusion, seeded random
//! MCT-dense circuits and the bundled query-circuit fixtures.

mod fixtures;
mod random;
mod zx;

use serde::{Deserialize, Serialize};

pub use fixtures::{causal_query_circuit, fixture_names, load_fixture, parse_fixture, CausalGraph, Fixture};
pub use random::{random_mct_dense, random_mct_dense_with, MctDenseConfig};
pub use zx::{
    diffusion_diagram, diffusion_gates, split_stages, to_diagram, to_diagram_from_row, with_zero_inputs, zero_state,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Gate {
    X {
        target: usize,
    },
    H {
        target: usize,
    },
    #[serde(rename = "cx")]
    Cnot {
        control: usize,
        target: usize,
    },
    Mct {
        controls: Vec<usize>,
        target: usize,
    },
}

impl Gate {
    /// Every qubit the gate touches, target last.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::X { target } | Gate::H { target } => vec![*target],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Mct { controls, target } => controls.iter().copied().chain([*target]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("a circuit needs at least one qubit")]
    NoQubits,
    #[error("gate {gate}: qubit {qubit} out of range")]
    QubitOutOfRange { gate: usize, qubit: usize },
    #[error("gate {gate}: empty control set")]
    EmptyControls { gate: usize },
    #[error("gate {gate}: control equals target")]
    ControlIsTarget { gate: usize },
    #[error("gate {gate}: repeated control {qubit}")]
    DuplicateControl { gate: usize, qubit: usize },
    #[error("diffusion register: {0}")]
    Diffusion(String),
    #[error("line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("need at least {needed} qubits, got {got}")]
    TooFewQubits { needed: usize, got: usize },
    #[error("{0}")]
    Config(String),
}

impl From<serde_json::Error> for CircuitError {
    fn from(e: serde_json::Error) -> Self {
        CircuitError::Json { line: e.line(), column: e.column(), msg: e.to_string() }
    }
}

/// A gate list on `qubits` wires. `diffusion`, when present, names the search
/// register of a Grover diffusion operator that follows the gates; it is kept
/// apart so that drivers can treat the two stages separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub qubits: usize,
    pub gates: Vec<Gate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffusion: Option<Vec<usize>>,
}

impl Circuit {
    pub fn new(qubits: usize) -> Self {
        Circuit { qubits, gates: Vec::new(), diffusion: None }
    }

    pub fn push(&mut self, g: Gate) -> &mut Self {
        self.gates.push(g);
        self
    }

    pub fn x(&mut self, t: usize) -> &mut Self {
        self.push(Gate::X { target: t })
    }

    pub fn h(&mut self, t: usize) -> &mut Self {
        self.push(Gate::H { target: t })
    }

    pub fn cx(&mut self, c: usize, t: usize) -> &mut Self {
        self.push(Gate::Cnot { control: c, target: t })
    }

    pub fn mct(&mut self, controls: &[usize], t: usize) -> &mut Self {
        self.push(Gate::Mct { controls: controls.to_vec(), target: t })
    }

    pub fn validate(&self) -> Result<(), CircuitError> {
        if self.qubits == 0 {
            return Err(CircuitError::NoQubits);
        }
        for (i, g) in self.gates.iter().enumerate() {
            if let Some(&q) = g.qubits().iter().find(|&&q| q >= self.qubits) {
                return Err(CircuitError::QubitOutOfRange { gate: i, qubit: q });
            }
            match g {
                Gate::Cnot { control, target } if control == target => {
                    return Err(CircuitError::ControlIsTarget { gate: i })
                }
                Gate::Mct { controls, target } => {
                    if controls.is_empty() {
                        return Err(CircuitError::EmptyControls { gate: i });
                    }
                    if controls.contains(target) {
                        return Err(CircuitError::ControlIsTarget { gate: i });
                    }
                    let mut seen = vec![false; self.qubits];
                    for &c in controls {
                        if std::mem::replace(&mut seen[c], true) {
                            return Err(CircuitError::DuplicateControl { gate: i, qubit: c });
                        }
                    }
                }
                _ => {}
            }
        }
        if let Some(reg) = &self.diffusion {
            if reg.len() < 2 {
                return Err(CircuitError::Diffusion("needs at least two qubits".into()));
            }
            let mut seen = vec![false; self.qubits];
            for &q in reg {
                if q >= self.qubits || std::mem::replace(&mut seen[q], true) {
                    return Err(CircuitError::Diffusion(format!("bad or repeated qubit {q}")));
                }
            }
        }
        Ok(())
    }

    /// The gates followed by the diffusion operator, if any.
    pub fn with_diffusion_expanded(&self) -> Circuit {
        let mut c = Circuit { qubits: self.qubits, gates: self.gates.clone(), diffusion: None };
        if let Some(reg) = &self.diffusion {
            c.gates.extend(diffusion_gates(reg));
        }
        c
    }

    /// Applies the gates to a classical bit string, or `None` if the circuit
    /// contains a Hadamard. Bit `q` is qubit `q`.
    pub fn classical_apply(&self, mut bits: Vec<bool>) -> Option<Vec<bool>> {
        for g in &self.gates {
            match g {
                Gate::X { target } => bits[*target] ^= true,
                Gate::H { .. } => return None,
                Gate::Cnot { control, target } => bits[*target] ^= bits[*control],
                Gate::Mct { controls, target } => bits[*target] ^= controls.iter().all(|&c| bits[c]),
            }
        }
        Some(bits)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Parses and validates a circuit in the JSON interchange format.
pub fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let c: Circuit = serde_json::from_str(text)?;
    c.validate()?;
    Ok(c)
}
