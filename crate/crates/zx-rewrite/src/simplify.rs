use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VId, VertexKind};

use crate::rules::{add_leaf, apply_in_place, check, find_matches, is_leaf, RewriteKind};

/// Simplifier options.
#[derive(Clone, Copy, Debug, Default)]
pub struct SimplifyConfig {
    /// Reserved for a full Clifford simplification pass. Only the partial
    /// strategy exists; setting this has no effect yet.
    pub full: bool,
}

/// Resolves self-loops on spiders. Plain loops vanish, Hadamard loops add π
/// with a factor 1/√2, and a star loop on a Z spider pins it to |0…0⟩.
/// Star loops on X spiders are left alone. Returns whether anything changed.
pub fn remove_self_loops(d: &mut Diagram) -> bool {
    let mut changed = false;
    let vs: Vec<VId> = d.vertex_ids().collect();
    for v in vs {
        if !d.contains_vertex(v) || !d.kind(v).is_spider() {
            continue;
        }
        let loops: Vec<_> = d.incident(v).iter().copied().filter(|&e| d.edge(e).is_loop()).collect();
        let mut star_loop = false;
        for e in loops {
            match d.edge(e).kind {
                EdgeKind::Plain => {
                    d.remove_edge(e).expect("live");
                    changed = true;
                }
                EdgeKind::Hadamard => {
                    d.remove_edge(e).expect("live");
                    d.add_to_phase(v, Phase::PI);
                    d.mul_scalar(ExactScalar::INV_SQRT2);
                    changed = true;
                }
                EdgeKind::Star => star_loop |= d.kind(v).is_z(),
            }
        }
        if star_loop {
            // the loop contributes [s = 0]; further star loops then give 1
            let legs: Vec<_> = d.incident(v).iter().copied().filter(|&e| !d.edge(e).is_loop()).collect();
            let m = legs.len() as i32;
            for e in legs {
                let ed = d.edge(e);
                add_leaf(d, ed.other(v), VertexKind::X(Phase::ZERO), ed.kind);
            }
            d.remove_vertex(v).expect("live");
            d.mul_scalar(ExactScalar::sqrt2_pow(-m));
            changed = true;
        }
    }
    changed
}

/// Leaf attached by a Hadamard edge becomes the other colour on a plain edge.
fn normalise_hadamard_leaves(d: &mut Diagram) -> bool {
    let mut changed = false;
    let vs: Vec<VId> = d.vertex_ids().collect();
    for u in vs {
        if !d.contains_vertex(u) || !is_leaf(d, u) {
            continue;
        }
        let e = d.incident(u)[0];
        if d.edge(e).kind == EdgeKind::Hadamard {
            let k = d.kind(u).toggled();
            d.set_kind(u, k).expect("live");
            d.set_edge_kind(e, EdgeKind::Plain).expect("live");
            changed = true;
        }
    }
    changed
}

fn absorb_isolated(d: &mut Diagram) -> bool {
    let vs: Vec<VId> = d.vertex_ids().filter(|&v| d.kind(v).is_spider() && d.incident(v).is_empty()).collect();
    for &v in &vs {
        let p = d.phase(v);
        d.remove_vertex(v).expect("live");
        d.mul_scalar(ExactScalar::ONE + p.exp());
    }
    !vs.is_empty()
}

fn apply_all(d: &mut Diagram, kind: RewriteKind) -> bool {
    let mut changed = false;
    for s in find_matches(d, kind) {
        if check(d, &s) {
            apply_in_place(d, &s).expect("checked");
            changed = true;
        }
    }
    changed
}

/// Runs the partial strategy to a fixpoint: loop removal, state copy, spider
/// fusion, identity removal, the three star-state rules, Hadamard-leaf
/// normalisation and absorption of isolated spiders into the scalar. Stops
/// early once the scalar is zero.
pub fn partial_simplify(d: &Diagram) -> Diagram {
    let mut out = d.clone();
    partial_simplify_in_place(&mut out);
    out
}

pub fn partial_simplify_in_place(d: &mut Diagram) {
    use RewriteKind::*;
    loop {
        if d.scalar().is_zero() {
            return;
        }
        let mut changed = remove_self_loops(d);
        changed |= apply_all(d, StateCopy);
        changed |= apply_all(d, SpiderFusion);
        changed |= apply_all(d, IdentityRemoval);
        for k in [StarStateXPi, StarStateX0, StarStateZPi] {
            changed |= apply_all(d, k);
        }
        changed |= normalise_hadamard_leaves(d);
        changed |= absorb_isolated(d);
        if !changed {
            return;
        }
    }
}
