use std::collections::BTreeSet;

use zx_core::{Diagram, EId, EdgeKind, Phase, VId, VertexKind};

use crate::rules::{apply_in_place, RewriteKind, Site};

/// Degree-two X(π) on a qubit line with plain edges to both line neighbours.
fn is_wire_not(d: &Diagram, p: VId) -> bool {
    d.kind(p) == VertexKind::X(Phase::PI)
        && d.qubit(p) >= 0
        && d.incident(p).len() == 2
        && d.incident(p).iter().all(|&e| {
            let ed = d.edge(e);
            !ed.is_loop() && ed.kind == EdgeKind::Plain && d.qubit(ed.other(p)) == d.qubit(p)
        })
}

/// The neighbour on the same line closest to the inputs.
fn left_leg(d: &Diagram, v: VId) -> Option<(EId, VId)> {
    let (q, r) = (d.qubit(v), d.row(v));
    if q < 0 {
        return None;
    }
    d.neighbours(v).filter(|&(_, w)| w != v && d.qubit(w) == q && d.row(w) < r).max_by_key(|&(_, w)| (d.row(w), w))
}

/// Puts a fresh NOT on the plain edge `e` between `w` (left) and `v`.
fn insert_not(d: &mut Diagram, e: EId, w: VId, v: VId) -> VId {
    d.remove_edge(e).expect("live");
    let n = d.add_vertex_at(VertexKind::X(Phase::PI), d.qubit(v), d.row(v));
    d.add_edge(w, n, EdgeKind::Plain).expect("live");
    d.add_edge(n, v, EdgeKind::Plain).expect("live");
    n
}

/// `t` just absorbed a π. Tidy it up and queue any NOT that should keep moving.
fn settle_x(d: &mut Diagram, t: VId, work: &mut BTreeSet<VId>) {
    let inc = d.incident(t).to_vec();
    let p = d.phase(t);
    if p.is_zero() && inc.len() == 2 && !inc.iter().any(|&e| d.edge(e).is_loop()) {
        let (e1, e2) = (d.edge(inc[0]), d.edge(inc[1]));
        if let Some(k) = e1.kind.compose(e2.kind) {
            let (a, b) = (e1.other(t), e2.other(t));
            d.remove_vertex(t).expect("live");
            d.add_edge(a, b, k).expect("live");
        }
        return;
    }
    if is_wire_not(d, t) {
        work.insert(t);
        return;
    }
    if p == Phase::PI && inc.len() >= 3 {
        if let Some((e, w)) = left_leg(d, t) {
            if d.edge(e).kind == EdgeKind::Plain {
                d.set_phase(t, Phase::ZERO);
                let n = insert_not(d, e, w, t);
                work.insert(n);
            }
        }
    }
}

/// Moves NOTs on qubit lines towards the inputs.
///
/// A NOT fuses into X spiders (and is re-emitted on their input side when
/// they sit on a line), commutes through star-free Z spiders, and stops at
/// boundaries, Hadamard wires and Z spiders that carry star edges. Copies
/// sent down a Z spider's other legs fuse into X neighbours; one meeting an
/// X(π) in front of a star edge cancels it into a direct star.
pub fn push_nots_to_boundary(d: &Diagram) -> Diagram {
    let mut d = d.clone();
    let mut work: BTreeSet<VId> = d.vertex_ids().filter(|&v| is_wire_not(&d, v)).collect();
    while let Some(p) = work.pop_first() {
        if !d.contains_vertex(p) || !is_wire_not(&d, p) {
            continue;
        }
        let Some((e, w)) = left_leg(&d, p) else { continue };
        match d.kind(w) {
            VertexKind::Boundary => {}
            VertexKind::X(_) => {
                let site = Site { kind: RewriteKind::SpiderFusion, vertices: vec![w, p], edges: vec![e] };
                apply_in_place(&mut d, &site).expect("valid fusion");
                settle_x(&mut d, w, &mut work);
            }
            VertexKind::Z(_) => {
                if d.star_degree(w) > 0 || d.incident(w).iter().any(|&f| d.edge(f).is_loop()) {
                    continue;
                }
                let before: BTreeSet<VId> = d.vertex_ids().collect();
                let site = Site { kind: RewriteKind::PiCommutation, vertices: vec![p, w], edges: vec![e] };
                apply_in_place(&mut d, &site).expect("valid commutation");
                let fresh: Vec<VId> = d.vertex_ids().filter(|v| !before.contains(v)).collect();
                for n in fresh {
                    let (f, t) = d.neighbours(n).find(|&(_, t)| t != w).expect("inserted NOT has two legs");
                    if is_wire_not(&d, n) {
                        work.insert(n);
                    } else if d.kind(t).is_x() && d.edge(f).kind == EdgeKind::Plain {
                        let site = Site { kind: RewriteKind::SpiderFusion, vertices: vec![t, n], edges: vec![f] };
                        apply_in_place(&mut d, &site).expect("valid fusion");
                        settle_x(&mut d, t, &mut work);
                    }
                }
            }
        }
    }
    d
}
