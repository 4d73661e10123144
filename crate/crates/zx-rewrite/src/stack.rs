use std::collections::{BTreeMap, BTreeSet};

use zx_core::{Diagram, EId, EdgeKind, Phase, VId, VertexKind};

use crate::rules::fuse;

/// Two Z spiders joined through a single NOT, both carrying star edges.
/// The strategy decomposes such a pair in one action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StackPair {
    pub a: VId,
    pub b: VId,
    pub not: VId,
}

fn interposer(d: &Diagram, x: VId) -> Option<(VId, VId)> {
    if d.kind(x) != VertexKind::X(Phase::PI) || d.incident(x).len() != 2 {
        return None;
    }
    let mut ends = Vec::new();
    for &e in d.incident(x) {
        let ed = d.edge(e);
        if ed.is_loop() || ed.kind != EdgeKind::Plain || !d.kind(ed.other(x)).is_z() {
            return None;
        }
        ends.push(ed.other(x));
    }
    (ends[0] != ends[1]).then(|| (ends[0].min(ends[1]), ends[0].max(ends[1])))
}

/// All linked stack pairs, ordered by the lower spider id.
pub fn linked_pairs(d: &Diagram) -> Vec<StackPair> {
    let mut out: Vec<StackPair> = d
        .vertex_ids()
        .filter_map(|x| interposer(d, x).map(|(a, b)| StackPair { a, b, not: x }))
        .filter(|p| d.star_degree(p.a) > 0 && d.star_degree(p.b) > 0)
        .collect();
    out.sort_by_key(|p| (p.a, p.b));
    out
}

/// Rewrites every tree of Z spiders linked by NOTs (or plain Z–Z edges) into
/// two stacks: the spiders of even NOT parity fuse into one, the odd ones into
/// the other, with a single NOT between them. Components without a NOT or
/// without a star edge, and components containing a cycle, are left alone.
pub fn to_stack_form(d: &Diagram) -> Diagram {
    let mut d = d.clone();
    // links: (spider, spider, parity, interposer or edge)
    enum Link {
        Not(VId),
        Wire(EId),
    }
    let mut adj: BTreeMap<VId, Vec<(VId, u8, Link)>> = BTreeMap::new();
    for x in d.vertex_ids() {
        if let Some((a, b)) = interposer(&d, x) {
            adj.entry(a).or_default().push((b, 1, Link::Not(x)));
            adj.entry(b).or_default().push((a, 1, Link::Not(x)));
        }
    }
    for e in d.edge_ids() {
        let ed = d.edge(e);
        if ed.kind == EdgeKind::Plain && !ed.is_loop() && d.kind(ed.a).is_z() && d.kind(ed.b).is_z() {
            adj.entry(ed.a).or_default().push((ed.b, 0, Link::Wire(e)));
            adj.entry(ed.b).or_default().push((ed.a, 0, Link::Wire(e)));
        }
    }
    let mut done: BTreeSet<VId> = BTreeSet::new();
    let roots: Vec<VId> = adj.keys().copied().collect();
    for root in roots {
        if done.contains(&root) {
            continue;
        }
        // BFS with parities
        let mut parity: BTreeMap<VId, u8> = BTreeMap::from([(root, 0)]);
        let mut nots = BTreeSet::new();
        let mut wires = BTreeSet::new();
        let mut links = 0usize;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for (w, p, l) in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                links += 1;
                match l {
                    Link::Not(x) => nots.insert(*x),
                    Link::Wire(e) => wires.insert(*e),
                };
                if !parity.contains_key(w) {
                    parity.insert(*w, parity[&v] ^ p);
                    queue.push(*w);
                }
            }
        }
        done.extend(parity.keys().copied());
        let tree = links / 2 == parity.len() - 1 && nots.len() + wires.len() == links / 2;
        let stars = parity.keys().any(|&v| d.star_degree(v) > 0);
        if !tree || nots.is_empty() || !stars {
            continue;
        }
        for &x in &nots {
            d.remove_vertex(x).expect("live");
        }
        let class = |c: u8| parity.iter().filter(|&(_, &p)| p == c).map(|(&v, _)| v).collect::<Vec<_>>();
        let mut heads = Vec::new();
        for c in [0u8, 1] {
            let members = class(c);
            let head = members[0];
            for &v in &members[1..] {
                let e = wires.iter().copied().find(|&e| {
                    d.contains_edge(e) && {
                        let ed = d.edge(e);
                        (ed.a == head && ed.b == v) || (ed.a == v && ed.b == head)
                    }
                });
                match e {
                    Some(e) => fuse(&mut d, head, v, e),
                    None => {
                        let e = d.add_edge(head, v, EdgeKind::Plain).expect("live");
                        fuse(&mut d, head, v, e);
                    }
                }
            }
            // wires between members became plain self-loops (factor 1)
            for e in d.incident(head).to_vec() {
                let ed = d.edge(e);
                if ed.is_loop() && ed.kind == EdgeKind::Plain {
                    d.remove_edge(e).expect("live");
                }
            }
            heads.push(head);
        }
        let (a, b) = (heads[0], heads[1]);
        let x = d.add_vertex_at(VertexKind::X(Phase::PI), d.qubit(a), d.row(a).max(d.row(b)));
        d.add_edge(a, x, EdgeKind::Plain).expect("live");
        d.add_edge(x, b, EdgeKind::Plain).expect("live");
    }
    d
}
