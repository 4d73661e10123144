use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VertexKind};

use crate::{decomp, DecompositionRule};

/// `k` bare star edges, input `i` to output `i`.
pub fn star_edges_lhs(k: usize) -> Diagram {
    let mut d = Diagram::new();
    let ins: Vec<_> = (0..k).map(|q| d.add_input(q as i32)).collect();
    let outs: Vec<_> = (0..k).map(|q| d.add_output(q as i32)).collect();
    for (i, o) in ins.into_iter().zip(outs) {
        d.add_edge(i, o, EdgeKind::Star).expect("live");
    }
    d
}

/// `legs` copies of a Z(α) leaf behind a star edge: the state (1+e^{iα}, 1)^{⊗legs}.
pub fn star_state_lhs(legs: usize, phase: Phase) -> Diagram {
    let mut d = Diagram::new();
    for q in 0..legs {
        let z = d.add_vertex(VertexKind::Z(phase));
        let o = d.add_output(q as i32);
        d.add_edge(z, o, EdgeKind::Star).expect("live");
    }
    d
}

/// Z(α) with one plain leg and `m` star legs, all to outputs.
pub fn dynamic_lhs(m: usize, alpha: Phase) -> Diagram {
    let mut d = Diagram::new();
    let v = d.add_vertex(VertexKind::Z(alpha));
    let o = d.add_output(0);
    d.add_edge(v, o, EdgeKind::Plain).expect("live");
    for q in 1..=m {
        let o = d.add_output(q as i32);
        d.add_edge(v, o, EdgeKind::Star).expect("live");
    }
    d
}

fn from_terms(id: String, lhs: Diagram, terms: [zx_core::Term; 2], r: u32, phase: Option<Phase>) -> DecompositionRule {
    DecompositionRule {
        id,
        legs: lhs.outputs().len() + lhs.inputs().len(),
        phase,
        terms_p: 2,
        reduction_r: r,
        lhs,
        branches: terms.into_iter().map(|t| (t.coeff, t.diagram)).collect(),
    }
}

/// The elementary decomposition of a two-legged Z(π/4), as a rule.
pub fn elementary_rule() -> DecompositionRule {
    let mut lhs = Diagram::new();
    let v = lhs.add_vertex(VertexKind::Z(Phase::new(1)));
    for q in 0..2 {
        let o = lhs.add_output(q);
        lhs.add_edge(v, o, EdgeKind::Plain).expect("live");
    }
    let terms = decomp::elementary_decompose(&lhs, v).expect("spider");
    from_terms("elementary".into(), lhs, terms, 1, Some(Phase::new(1)))
}

/// The dynamic decomposition of [`dynamic_lhs`]`(m, π/4)`, as a rule.
pub fn dynamic_rule(m: usize) -> DecompositionRule {
    let lhs = dynamic_lhs(m, Phase::new(1));
    let v = lhs.vertex_ids().find(|&v| lhs.kind(v).is_z()).expect("spider");
    let terms = decomp::dynamic_decompose(&lhs, v).expect("has stars");
    from_terms(format!("dynamic_m{m}"), lhs, terms, m as u32, Some(Phase::new(1)))
}

/// Scalar multiple of a diagram.
pub fn scaled(mut d: Diagram, s: ExactScalar) -> Diagram {
    d.mul_scalar(s);
    d
}
