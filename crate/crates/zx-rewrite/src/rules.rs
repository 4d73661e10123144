use zx_core::{Diagram, EId, EdgeKind, ExactScalar, Phase, VId, VertexKind};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RewriteKind {
    SpiderFusion,
    ColorChange,
    PiCommutation,
    StateCopy,
    Bialgebra,
    HHCancel,
    Hopf,
    IdentityRemoval,
    EulerDecomposition,
    StarStateXPi,
    StarStateX0,
    StarStateZPi,
}

impl RewriteKind {
    pub const ALL: [RewriteKind; 12] = [
        RewriteKind::SpiderFusion,
        RewriteKind::ColorChange,
        RewriteKind::PiCommutation,
        RewriteKind::StateCopy,
        RewriteKind::Bialgebra,
        RewriteKind::HHCancel,
        RewriteKind::Hopf,
        RewriteKind::IdentityRemoval,
        RewriteKind::EulerDecomposition,
        RewriteKind::StarStateXPi,
        RewriteKind::StarStateX0,
        RewriteKind::StarStateZPi,
    ];
}

/// A place where a rule applies.
///
/// `vertices` and `edges` are rule specific:
/// - fusion: `[kept, absorbed]`, `[edge]`
/// - colour change, identity removal, HH cancel: `[v]`, `[]`
/// - π-commutation: `[pi, spider]`, `[edge]`
/// - state copy: `[leaf, spider]`, `[edge]`
/// - bialgebra: `[z, x]`, `[edge]`
/// - Hopf: `[z, x]`, `[edge, edge]`
/// - Euler: `[]`, `[hadamard edge]`
/// - star-state rules: `[leaf, far end]`, `[star edge]`
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Site {
    pub kind: RewriteKind,
    pub vertices: Vec<VId>,
    pub edges: Vec<EId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("stale {0:?} site")]
    Stale(RewriteKind),
}

/// Spider of degree one attached by a non-loop edge.
pub fn is_leaf(d: &Diagram, v: VId) -> bool {
    d.kind(v).is_spider() && d.incident(v).len() == 1 && !d.edge(d.incident(v)[0]).is_loop()
}

fn has_loop(d: &Diagram, v: VId) -> bool {
    d.incident(v).iter().any(|&e| d.edge(e).is_loop())
}

fn site(kind: RewriteKind, vertices: Vec<VId>, edges: Vec<EId>) -> Site {
    Site { kind, vertices, edges }
}

/// All sites of `kind`, in increasing id order.
pub fn find_matches(d: &Diagram, kind: RewriteKind) -> Vec<Site> {
    use RewriteKind::*;
    let mut out = Vec::new();
    match kind {
        SpiderFusion | StateCopy | PiCommutation | Bialgebra => {
            for e in d.edge_ids() {
                let ed = d.edge(e);
                if ed.kind != EdgeKind::Plain || ed.is_loop() {
                    continue;
                }
                for (a, b) in [(ed.a, ed.b), (ed.b, ed.a)] {
                    let s = site(kind, vec![a, b], vec![e]);
                    if check(d, &s) {
                        out.push(s);
                        break;
                    }
                }
            }
        }
        ColorChange | HHCancel | IdentityRemoval => {
            for v in d.vertex_ids() {
                let s = site(kind, vec![v], vec![]);
                if check(d, &s) {
                    out.push(s);
                }
            }
        }
        Hopf => {
            for u in d.vertex_ids() {
                if !d.kind(u).is_z() {
                    continue;
                }
                let mut seen = Vec::new();
                for (e, v) in d.neighbours(u) {
                    if v == u || !d.kind(v).is_x() || d.edge(e).kind != EdgeKind::Plain || seen.contains(&v) {
                        continue;
                    }
                    seen.push(v);
                    let es: Vec<EId> = d
                        .edges_between(u, v)
                        .into_iter()
                        .filter(|&f| d.edge(f).kind == EdgeKind::Plain)
                        .take(2)
                        .collect();
                    if es.len() == 2 {
                        out.push(site(kind, vec![u, v], es));
                    }
                }
            }
        }
        EulerDecomposition => {
            for e in d.edge_ids() {
                let s = site(kind, vec![], vec![e]);
                if check(d, &s) {
                    out.push(s);
                }
            }
        }
        StarStateXPi | StarStateX0 | StarStateZPi => {
            for u in d.vertex_ids() {
                if !is_leaf(d, u) {
                    continue;
                }
                let e = d.incident(u)[0];
                let s = site(kind, vec![u, d.edge(e).other(u)], vec![e]);
                if check(d, &s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Whether `s` is still a valid site in `d`.
pub fn check(d: &Diagram, s: &Site) -> bool {
    use RewriteKind::*;
    if s.vertices.iter().any(|&v| !d.contains_vertex(v)) || s.edges.iter().any(|&e| !d.contains_edge(e)) {
        return false;
    }
    let ends = |e: EId, a: VId, b: VId| {
        let ed = d.edge(e);
        (ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)
    };
    match s.kind {
        SpiderFusion => {
            let [u, v] = s.vertices[..] else { return false };
            let e = s.edges[0];
            u != v
                && ends(e, u, v)
                && d.edge(e).kind == EdgeKind::Plain
                && d.kind(u).is_spider()
                && d.kind(u).same_colour(d.kind(v))
        }
        ColorChange => {
            let v = s.vertices[0];
            d.kind(v).is_spider() && d.star_degree(v) == 0
        }
        PiCommutation => {
            let [p, v] = s.vertices[..] else { return false };
            let e = s.edges[0];
            if p == v || !ends(e, p, v) || d.edge(e).kind != EdgeKind::Plain {
                return false;
            }
            let (kp, kv) = (d.kind(p), d.kind(v));
            let pi_ok = kp.phase() == Some(Phase::PI)
                && d.incident(p).len() == 2
                && d.degree(p) == 2
                && d.incident(p).iter().all(|&f| d.edge(f).kind == EdgeKind::Plain)
                && d.edges_between(p, v).len() == 1;
            pi_ok && kv.is_spider() && !kv.same_colour(kp) && !has_loop(d, v)
        }
        StateCopy => {
            let [u, v] = s.vertices[..] else { return false };
            let e = s.edges[0];
            let (ku, kv) = (d.kind(u), d.kind(v));
            u != v
                && ends(e, u, v)
                && d.edge(e).kind == EdgeKind::Plain
                && is_leaf(d, u)
                && ku.phase().is_some_and(Phase::is_pauli)
                && kv.is_spider()
                && !kv.same_colour(ku)
                && !has_loop(d, v)
        }
        Bialgebra => {
            let [u, v] = s.vertices[..] else { return false };
            let e = s.edges[0];
            let (ku, kv) = (d.kind(u), d.kind(v));
            let zero = |k: VertexKind| k.phase() == Some(Phase::ZERO);
            u != v
                && ends(e, u, v)
                && d.edge(e).kind == EdgeKind::Plain
                && ku.is_z()
                && kv.is_x()
                && zero(ku)
                && zero(kv)
                && d.edges_between(u, v).len() == 1
                && !has_loop(d, u)
                && !has_loop(d, v)
        }
        HHCancel | IdentityRemoval => {
            let v = s.vertices[0];
            let k = d.kind(v);
            if k.phase() != Some(Phase::ZERO) || d.incident(v).len() != 2 || has_loop(d, v) {
                return false;
            }
            let k1 = d.edge(d.incident(v)[0]).kind;
            let k2 = d.edge(d.incident(v)[1]).kind;
            match s.kind {
                HHCancel => k1 == EdgeKind::Hadamard && k2 == EdgeKind::Hadamard,
                _ => (k1 == EdgeKind::Plain || k2 == EdgeKind::Plain) && k1.compose(k2).is_some(),
            }
        }
        Hopf => {
            let [u, v] = s.vertices[..] else { return false };
            s.edges.len() == 2
                && s.edges[0] != s.edges[1]
                && d.kind(u).is_z()
                && d.kind(v).is_x()
                && s.edges.iter().all(|&e| ends(e, u, v) && d.edge(e).kind == EdgeKind::Plain)
        }
        EulerDecomposition => {
            let ed = d.edge(s.edges[0]);
            ed.kind == EdgeKind::Hadamard && !ed.is_loop()
        }
        StarStateXPi | StarStateX0 | StarStateZPi => {
            let [u, w] = s.vertices[..] else { return false };
            let e = s.edges[0];
            let want = match s.kind {
                StarStateXPi => VertexKind::X(Phase::PI),
                StarStateX0 => VertexKind::X(Phase::ZERO),
                _ => VertexKind::Z(Phase::PI),
            };
            is_leaf(d, u) && ends(e, u, w) && d.edge(e).kind == EdgeKind::Star && d.kind(u) == want
        }
    }
}

pub fn apply_rewrite(d: &Diagram, s: &Site) -> Result<Diagram, RewriteError> {
    let mut out = d.clone();
    apply_in_place(&mut out, s)?;
    Ok(out)
}

pub fn apply_in_place(d: &mut Diagram, s: &Site) -> Result<(), RewriteError> {
    use RewriteKind::*;
    if !check(d, s) {
        return Err(RewriteError::Stale(s.kind));
    }
    match s.kind {
        SpiderFusion => fuse(d, s.vertices[0], s.vertices[1], s.edges[0]),
        ColorChange => color_change(d, s.vertices[0]),
        PiCommutation => pi_commute(d, s.vertices[0], s.vertices[1], s.edges[0]),
        StateCopy => state_copy(d, s.vertices[0], s.vertices[1]),
        Bialgebra => bialgebra(d, s.vertices[0], s.vertices[1], s.edges[0]),
        HHCancel | IdentityRemoval => remove_identity(d, s.vertices[0]),
        Hopf => {
            for &e in &s.edges {
                d.remove_edge(e).expect("checked");
            }
            d.mul_scalar(ExactScalar::HALF);
        }
        EulerDecomposition => euler(d, s.edges[0]),
        StarStateXPi => replace_star_leaf(d, s, VertexKind::X(Phase::ZERO), ExactScalar::ONE),
        StarStateX0 => replace_star_leaf(d, s, VertexKind::Z(Phase::ZERO), ExactScalar::SQRT2),
        StarStateZPi => replace_star_leaf(d, s, VertexKind::X(Phase::PI), ExactScalar::INV_SQRT2),
    }
    Ok(())
}

/// Adds a degree-one spider hanging off `w`, placed on `w`'s line.
pub(crate) fn add_leaf(d: &mut Diagram, w: VId, kind: VertexKind, ek: EdgeKind) -> VId {
    let u = d.add_vertex_at(kind, d.qubit(w), d.row(w));
    d.add_edge(u, w, ek).expect("live vertex");
    u
}

/// Fuses `v` into `u` across the plain edge `e`. Parallel edges between them
/// become self-loops on `u`.
pub(crate) fn fuse(d: &mut Diagram, u: VId, v: VId, e: EId) {
    d.remove_edge(e).expect("checked");
    let pv = d.phase(v);
    d.add_to_phase(u, pv);
    let rest: Vec<EId> = d.incident(v).to_vec();
    for f in rest {
        let ed = d.remove_edge(f).expect("live edge");
        let a = if ed.a == v { u } else { ed.a };
        let b = if ed.b == v { u } else { ed.b };
        d.add_edge(a, b, ed.kind).expect("live vertices");
    }
    d.remove_vertex(v).expect("live vertex");
}

fn color_change(d: &mut Diagram, v: VId) {
    let k = d.kind(v).toggled();
    d.set_kind(v, k).expect("live vertex");
    for e in d.incident(v).to_vec() {
        let ed = d.edge(e);
        if ed.is_loop() {
            continue;
        }
        let nk = match ed.kind {
            EdgeKind::Plain => EdgeKind::Hadamard,
            EdgeKind::Hadamard => EdgeKind::Plain,
            EdgeKind::Star => unreachable!("checked"),
        };
        d.set_edge_kind(e, nk).expect("live edge");
    }
}

fn pi_commute(d: &mut Diagram, p: VId, v: VId, e: EId) {
    let alpha = d.phase(v);
    let pkind = d.kind(p);
    let other = d.incident(p).iter().copied().find(|&f| f != e).expect("degree two");
    let t = d.edge(other).other(p);
    let legs: Vec<EId> = d.incident(v).iter().copied().filter(|&f| f != e).collect();
    d.remove_vertex(p).expect("live");
    for f in legs {
        let ed = d.remove_edge(f).expect("live edge");
        let w = ed.other(v);
        let n = d.add_vertex_at(pkind, d.qubit(w), d.row(v));
        d.add_edge(v, n, EdgeKind::Plain).expect("live");
        d.add_edge(n, w, ed.kind).expect("live");
    }
    d.add_edge(v, t, EdgeKind::Plain).expect("live");
    d.set_phase(v, -alpha);
    d.mul_scalar(alpha.exp());
}

fn state_copy(d: &mut Diagram, u: VId, v: VId) {
    let a = d.phase(u);
    let leaf = d.kind(u).with_phase(a);
    let alpha = d.phase(v);
    d.remove_vertex(u).expect("live");
    let legs: Vec<EId> = d.incident(v).to_vec();
    let m = legs.len() as i32;
    for f in legs {
        let ed = d.edge(f);
        add_leaf(d, ed.other(v), leaf, ed.kind);
    }
    d.remove_vertex(v).expect("live");
    let sign = if a == Phase::PI { alpha.exp() } else { ExactScalar::ONE };
    d.mul_scalar(sign.mul_sqrt2_pow(1 - m));
}

fn bialgebra(d: &mut Diagram, u: VId, v: VId, e: EId) {
    d.remove_edge(e).expect("checked");
    let ul: Vec<(VId, EdgeKind)> = d.neighbours(u).map(|(f, w)| (w, d.edge(f).kind)).collect();
    let vl: Vec<(VId, EdgeKind)> = d.neighbours(v).map(|(f, w)| (w, d.edge(f).kind)).collect();
    let (n, m) = (ul.len() as i32, vl.len() as i32);
    let (qu, ru, qv, rv) = (d.qubit(u), d.row(u), d.qubit(v), d.row(v));
    d.remove_vertex(u).expect("live");
    d.remove_vertex(v).expect("live");
    let xs: Vec<VId> = ul
        .iter()
        .map(|&(w, k)| {
            let x = d.add_vertex_at(VertexKind::X(Phase::ZERO), qu, ru);
            d.add_edge(x, w, k).expect("live");
            x
        })
        .collect();
    let zs: Vec<VId> = vl
        .iter()
        .map(|&(w, k)| {
            let z = d.add_vertex_at(VertexKind::Z(Phase::ZERO), qv, rv);
            d.add_edge(z, w, k).expect("live");
            z
        })
        .collect();
    for &x in &xs {
        for &z in &zs {
            d.add_edge(x, z, EdgeKind::Plain).expect("live");
        }
    }
    d.mul_scalar(ExactScalar::sqrt2_pow((n - 1) * (m - 1)));
}

fn remove_identity(d: &mut Diagram, v: VId) {
    let inc = d.incident(v).to_vec();
    let (e1, e2) = (d.edge(inc[0]), d.edge(inc[1]));
    let k = e1.kind.compose(e2.kind).expect("checked");
    let (a, b) = (e1.other(v), e2.other(v));
    d.remove_vertex(v).expect("live");
    d.add_edge(a, b, k).expect("live");
}

fn euler(d: &mut Diagram, e: EId) {
    let ed = d.remove_edge(e).expect("checked");
    let (q, r) = (d.qubit(ed.a), d.row(ed.a));
    let z1 = d.add_vertex_at(VertexKind::Z(Phase::HALF_PI), q, r);
    let x = d.add_vertex_at(VertexKind::X(Phase::HALF_PI), q, r);
    let z2 = d.add_vertex_at(VertexKind::Z(Phase::HALF_PI), q, r);
    for (a, b) in [(ed.a, z1), (z1, x), (x, z2), (z2, ed.b)] {
        d.add_edge(a, b, EdgeKind::Plain).expect("live");
    }
    d.mul_scalar(ExactScalar::omega(7));
}

fn replace_star_leaf(d: &mut Diagram, s: &Site, kind: VertexKind, scalar: ExactScalar) {
    let (u, w) = (s.vertices[0], s.vertices[1]);
    d.remove_vertex(u).expect("live");
    add_leaf(d, w, kind, EdgeKind::Plain);
    d.mul_scalar(scalar);
}
