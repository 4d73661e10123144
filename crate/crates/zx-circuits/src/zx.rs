use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VId, VertexKind};

use crate::{Circuit, CircuitError, Gate};

/// Qubit index given to spiders that sit between wires.
const OFF_WIRE: i32 = -1;

struct Builder {
    d: Diagram,
    last: Vec<VId>,
    pending: Vec<EdgeKind>,
}

impl Builder {
    fn new(n: usize) -> Self {
        let mut d = Diagram::new();
        let last = (0..n).map(|q| d.add_input(q as i32)).collect();
        Builder { d, last, pending: vec![EdgeKind::Plain; n] }
    }

    fn on_wire(&mut self, q: usize, kind: VertexKind, row: i32) -> VId {
        let v = self.d.add_vertex_at(kind, q as i32, row);
        self.d.add_edge(self.last[q], v, self.pending[q]).expect("live");
        self.last[q] = v;
        self.pending[q] = EdgeKind::Plain;
        v
    }

    fn off_wire(&mut self, kind: VertexKind, row: i32) -> VId {
        self.d.add_vertex_at(kind, OFF_WIRE, row)
    }

    fn edge(&mut self, a: VId, b: VId, k: EdgeKind) {
        self.d.add_edge(a, b, k).expect("live");
    }

    fn gate(&mut self, g: &Gate, row: i32) {
        let z0 = VertexKind::Z(Phase::ZERO);
        let x0 = VertexKind::X(Phase::ZERO);
        let xpi = VertexKind::X(Phase::PI);
        let zpi = VertexKind::Z(Phase::PI);
        match g {
            Gate::X { target } => {
                self.on_wire(*target, xpi, row);
            }
            Gate::H { target } => {
                let p = &mut self.pending[*target];
                *p = p.compose(EdgeKind::Hadamard).expect("plain or hadamard");
            }
            Gate::Cnot { control, target } => {
                let c = self.on_wire(*control, z0, row);
                let t = self.on_wire(*target, x0, row);
                self.edge(c, t, EdgeKind::Plain);
                self.d.mul_scalar(ExactScalar::SQRT2);
            }
            Gate::Mct { controls, target } => {
                // each control copies into a NOT, which meets the shared Z(π)
                // through a star edge; the Z(π) is non-zero on 1 only when all
                // controls are 1 and then flips the target through a second
                // NOT-star-Z(π) chain
                let m = self.off_wire(zpi, row);
                for &c in controls {
                    let zc = self.on_wire(c, z0, row);
                    let n = self.off_wire(xpi, row);
                    self.edge(zc, n, EdgeKind::Plain);
                    self.edge(n, m, EdgeKind::Star);
                }
                let u = self.off_wire(xpi, row);
                let r = self.off_wire(zpi, row);
                self.edge(m, u, EdgeKind::Plain);
                self.edge(u, r, EdgeKind::Star);
                let xt = self.on_wire(*target, x0, row);
                self.edge(r, xt, EdgeKind::Plain);
                self.d.mul_scalar(ExactScalar::SQRT2);
            }
        }
    }

    fn finish(mut self) -> Diagram {
        for q in 0..self.last.len() {
            let o = self.d.add_output(q as i32);
            self.d.add_edge(self.last[q], o, self.pending[q]).expect("live");
        }
        self.d
    }
}

/// Translates a circuit, including its diffusion stage if it has one. The
/// oracle tensor of the result equals the circuit's unitary exactly.
pub fn to_diagram(c: &Circuit) -> Result<Diagram, CircuitError> {
    to_diagram_from_row(c, 1)
}

/// As [`to_diagram`], with gate `i` placed on row `first_row + i`.
pub fn to_diagram_from_row(c: &Circuit, first_row: i32) -> Result<Diagram, CircuitError> {
    c.validate()?;
    let mut b = Builder::new(c.qubits);
    let full = c.with_diffusion_expanded();
    for (i, g) in full.gates.iter().enumerate() {
        b.gate(g, first_row + i as i32);
    }
    Ok(b.finish())
}

/// The circuit without its diffusion stage, and the diffusion stage on its
/// own (rows continuing after the main part) if there is one.
pub fn split_stages(c: &Circuit) -> Result<(Diagram, Option<Diagram>), CircuitError> {
    let main = Circuit { qubits: c.qubits, gates: c.gates.clone(), diffusion: None };
    let d = to_diagram(&main)?;
    let diff = match &c.diffusion {
        Some(reg) => {
            let stage = Circuit { qubits: c.qubits, gates: diffusion_gates(reg), diffusion: None };
            Some(to_diagram_from_row(&stage, c.gates.len() as i32 + 1)?)
        }
        None => None,
    };
    c.validate()?;
    Ok((d, diff))
}

/// `H X (H_t MCT H_t) X H` over `register`, with the last qubit as target.
/// Equals `I − 2|s⟩⟨s|` on the register.
pub fn diffusion_gates(register: &[usize]) -> Vec<Gate> {
    let (&t, rest) = register.split_last().expect("non-empty register");
    let mut g = Vec::new();
    g.extend(register.iter().map(|&q| Gate::H { target: q }));
    g.extend(register.iter().map(|&q| Gate::X { target: q }));
    g.push(Gate::H { target: t });
    g.push(Gate::Mct { controls: rest.to_vec(), target: t });
    g.push(Gate::H { target: t });
    g.extend(register.iter().map(|&q| Gate::X { target: q }));
    g.extend(register.iter().map(|&q| Gate::H { target: q }));
    g
}

/// Grover diffusion on `n ≥ 2` qubits; its tensor is `−(2|s⟩⟨s| − I)`.
pub fn diffusion_diagram(n: usize) -> Result<Diagram, CircuitError> {
    if n < 2 {
        return Err(CircuitError::TooFewQubits { needed: 2, got: n });
    }
    let reg: Vec<usize> = (0..n).collect();
    to_diagram(&Circuit { qubits: n, gates: diffusion_gates(&reg), diffusion: None })
}

/// `|0…0⟩` on `n` qubits: X(0) states with scalar `1/√2ⁿ`.
pub fn zero_state(n: usize) -> Diagram {
    let mut d = Diagram::new();
    for q in 0..n {
        let v = d.add_vertex_at(VertexKind::X(Phase::ZERO), q as i32, 0);
        let o = d.add_output(q as i32);
        d.add_edge(v, o, EdgeKind::Plain).expect("live");
    }
    d.set_scalar(ExactScalar::sqrt2_pow(-(n as i32)));
    d
}

/// Feeds `|0…0⟩` into every input of `d`.
pub fn with_zero_inputs(d: &Diagram) -> Diagram {
    zero_state(d.inputs().len()).compose(d).expect("matching arity")
}
