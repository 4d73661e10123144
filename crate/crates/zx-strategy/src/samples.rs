//! Small diagrams that exercise particular corners of the drivers.

use zx_circuits::{to_diagram, Circuit};
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VertexKind};

/// One Toffoli with `n` controls on wires `0..n` and the target on wire `n`.
pub fn mct(n: usize) -> Diagram {
    let mut c = Circuit::new(n + 1);
    c.mct(&(0..n).collect::<Vec<_>>(), n);
    to_diagram(&c).expect("valid circuit")
}

/// Z_A -X(π)- Z_B on one line, `m` stars to outputs on each.
pub fn not_obstruction(m: usize) -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input(0);
    let a = d.add_vertex_at(VertexKind::Z(Phase::ZERO), 0, 1);
    let n = d.add_vertex_at(VertexKind::X(Phase::PI), 0, 2);
    let b = d.add_vertex_at(VertexKind::Z(Phase::ZERO), 0, 3);
    let o = d.add_output(0);
    for (p, q) in [(i, a), (a, n), (n, b), (b, o)] {
        d.add_edge(p, q, EdgeKind::Plain).expect("live");
    }
    for (k, v) in [a, b].into_iter().enumerate() {
        for j in 0..m {
            let o = d.add_output(1 + (k * m + j) as i32);
            d.add_edge(v, o, EdgeKind::Star).expect("live");
        }
    }
    d
}

/// A control line whose CNOTs land between starred spiders of a target line.
/// Each target-line spider carries two stars to outputs.
pub fn cnot_chain(reps: usize) -> Diagram {
    let mut d = Diagram::new();
    let ci = d.add_input(0);
    let ti = d.add_input(1);
    let (mut c_last, mut t_last) = (ci, ti);
    let mut next_out = 2;
    for r in 0..reps {
        let zt = d.add_vertex_at(VertexKind::Z(Phase::ZERO), 1, 2 * r as i32 + 1);
        d.add_edge(t_last, zt, EdgeKind::Plain).expect("live");
        for _ in 0..2 {
            let o = d.add_output(next_out);
            next_out += 1;
            d.add_edge(zt, o, EdgeKind::Star).expect("live");
        }
        t_last = zt;
        if r + 1 < reps {
            let zc = d.add_vertex_at(VertexKind::Z(Phase::ZERO), 0, 2 * r as i32 + 2);
            let xt = d.add_vertex_at(VertexKind::X(Phase::ZERO), 1, 2 * r as i32 + 2);
            d.add_edge(c_last, zc, EdgeKind::Plain).expect("live");
            d.add_edge(zt, xt, EdgeKind::Plain).expect("live");
            d.add_edge(zc, xt, EdgeKind::Plain).expect("live");
            d.mul_scalar(ExactScalar::SQRT2);
            c_last = zc;
            t_last = xt;
        }
    }
    let co = d.add_output(0);
    let to = d.add_output(1);
    d.add_edge(c_last, co, EdgeKind::Plain).expect("live");
    d.add_edge(t_last, to, EdgeKind::Plain).expect("live");
    let mut outs = d.outputs().to_vec();
    outs.sort_by_key(|&o| d.qubit(o));
    d.set_outputs(outs);
    d
}
