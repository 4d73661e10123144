use zx_core::{Diagram, EdgeKind, Phase, VId, VertexKind};
use zx_rewrite::linked_pairs;

use crate::StrategyError;

/// Bonus for a star reached through a NOT.
pub const EXTRA_WEIGHT: usize = 2;

/// A Z spider with star edges, ranked by [`master_weight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MasterCandidate {
    pub vertex: VId,
    pub star_degree: usize,
    pub weight: usize,
    /// Stack partner; the pair is decomposed in one action.
    pub linked_pair: Option<VId>,
}

/// Counts the stars around `v` and one Z spider further out.
///
/// Every star edge of `v` scores 1. If its far end `w` is a Z spider, each
/// other star edge of `w` scores 1, and each degree-2 spider hanging off `w`
/// by a plain edge whose other edge is a star scores 1, or
/// [`EXTRA_WEIGHT`] when that spider is an X(π).
pub fn master_weight(d: &Diagram, v: VId) -> Result<usize, StrategyError> {
    if !d.try_kind(v).is_some_and(VertexKind::is_z) {
        return Err(StrategyError::NotZ(v));
    }
    let mut weight = 0;
    for &e in d.incident(v) {
        let ed = d.edge(e);
        if ed.kind != EdgeKind::Star {
            continue;
        }
        weight += 1;
        if ed.is_loop() {
            continue;
        }
        let w = ed.other(v);
        if !d.kind(w).is_z() {
            continue;
        }
        for &f in d.incident(w) {
            if f == e {
                continue;
            }
            let fe = d.edge(f);
            if fe.kind == EdgeKind::Star {
                weight += 1;
                continue;
            }
            if fe.is_loop() || fe.kind != EdgeKind::Plain {
                continue;
            }
            let u = fe.other(w);
            let k = d.kind(u);
            if !k.is_spider() || d.degree(u) != 2 {
                continue;
            }
            let Some(&g) = d.incident(u).iter().find(|&&g| g != f) else {
                continue;
            };
            if d.edge(g).kind == EdgeKind::Star && !d.edge(g).is_loop() {
                weight += if k == VertexKind::X(Phase::PI) { EXTRA_WEIGHT } else { 1 };
            }
        }
    }
    Ok(weight)
}

/// Every Z spider with at least one star edge. Linked stack partners share
/// one weight, the sum of their own.
pub fn candidates(d: &Diagram) -> Vec<MasterCandidate> {
    let mut out: Vec<MasterCandidate> = d
        .vertex_ids()
        .filter(|&v| d.kind(v).is_z() && d.star_degree(v) > 0)
        .map(|v| MasterCandidate {
            vertex: v,
            star_degree: d.star_degree(v),
            weight: master_weight(d, v).expect("Z spider"),
            linked_pair: None,
        })
        .collect();
    for p in linked_pairs(d) {
        let ia = out.iter().position(|c| c.vertex == p.a);
        let ib = out.iter().position(|c| c.vertex == p.b);
        if let (Some(ia), Some(ib)) = (ia, ib) {
            if out[ia].linked_pair.is_some() || out[ib].linked_pair.is_some() {
                continue;
            }
            let w = out[ia].weight + out[ib].weight;
            out[ia].weight = w;
            out[ib].weight = w;
            out[ia].linked_pair = Some(p.b);
            out[ib].linked_pair = Some(p.a);
        }
    }
    out
}

/// Highest weight, then higher star degree, then lower id. `None` when no Z
/// spider carries a star edge.
pub fn select_master(d: &Diagram) -> Option<MasterCandidate> {
    candidates(d).into_iter().min_by_key(|c| (std::cmp::Reverse(c.weight), std::cmp::Reverse(c.star_degree), c.vertex))
}
