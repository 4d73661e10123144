use std::collections::BTreeMap;

use zx_core::{Diagram, EId, EdgeKind, ExactScalar, Phase, Term, VId, VertexKind};

use crate::{CatalogError, DecompositionRule};

fn leaf(d: &mut Diagram, w: VId, kind: VertexKind) {
    let u = d.add_vertex_at(kind, d.qubit(w), d.row(w));
    d.add_edge(u, w, EdgeKind::Plain).expect("live vertex");
}

/// Splits a spider into two branches by attaching a Pauli leaf and zeroing
/// its phase: `1/√2` with an X(0) leaf and `e^{iα}/√2` with an X(π) leaf
/// (Z leaves for an X spider).
pub fn elementary_decompose(d: &Diagram, v: VId) -> Result<[Term; 2], CatalogError> {
    let k = d.try_kind(v).ok_or(CatalogError::NoVertex(v))?;
    let alpha = k.phase().ok_or(CatalogError::Boundary(v))?;
    let leaf_kind = |p: Phase| if k.is_z() { VertexKind::X(p) } else { VertexKind::Z(p) };
    let mut out = Vec::with_capacity(2);
    for (p, c) in [(Phase::ZERO, ExactScalar::INV_SQRT2), (Phase::PI, alpha.exp() * ExactScalar::INV_SQRT2)] {
        let mut b = d.clone();
        b.set_phase(v, Phase::ZERO);
        leaf(&mut b, v, leaf_kind(p));
        out.push(Term::new(c, b));
    }
    Ok(out.try_into().expect("two branches"))
}

/// Two-branch decomposition of a Z spider with `m ≥ 1` star edges.
///
/// The spider is removed and each of its legs is fixed to the spider's value
/// `x`. At the far end of a leg this leaves a state: for `x = 0` an X(0), Z(0)
/// or Z(0) leaf on a plain, Hadamard or star leg, for `x = 1` an X(π), Z(π) or
/// X(0) leaf. The coefficients are `1/√2ⁿ` and `e^{iα}/√2ⁿ⁺ᵐ` for `n`
/// non-star legs.
pub fn dynamic_decompose(d: &Diagram, v: VId) -> Result<[Term; 2], CatalogError> {
    let k = d.try_kind(v).ok_or(CatalogError::NoVertex(v))?;
    let VertexKind::Z(alpha) = k else { return Err(CatalogError::NotZ(v)) };
    if d.star_degree(v) == 0 {
        return Err(CatalogError::NoStars(v));
    }
    let mut terms = Vec::with_capacity(2);
    for x in [0u8, 1] {
        let mut b = d.clone();
        let mut coeff = if x == 0 { ExactScalar::ONE } else { alpha.exp() };
        let legs: Vec<EId> = d.incident(v).to_vec();
        b.remove_vertex(v).expect("live");
        let mut zero = false;
        for e in legs {
            let ed = d.edge(e);
            if ed.is_loop() {
                match (ed.kind, x) {
                    (EdgeKind::Plain, _) => {}
                    (EdgeKind::Hadamard, 0) => coeff *= ExactScalar::INV_SQRT2,
                    (EdgeKind::Hadamard, _) => coeff *= -ExactScalar::INV_SQRT2,
                    (EdgeKind::Star, 0) => {}
                    (EdgeKind::Star, _) => zero = true,
                }
                continue;
            }
            let w = ed.other(v);
            let (kind, s) = match (ed.kind, x) {
                (EdgeKind::Plain, 0) => (VertexKind::X(Phase::ZERO), ExactScalar::INV_SQRT2),
                (EdgeKind::Plain, _) => (VertexKind::X(Phase::PI), ExactScalar::INV_SQRT2),
                (EdgeKind::Hadamard, 0) => (VertexKind::Z(Phase::ZERO), ExactScalar::INV_SQRT2),
                (EdgeKind::Hadamard, _) => (VertexKind::Z(Phase::PI), ExactScalar::INV_SQRT2),
                (EdgeKind::Star, 0) => (VertexKind::Z(Phase::ZERO), ExactScalar::ONE),
                (EdgeKind::Star, _) => (VertexKind::X(Phase::ZERO), ExactScalar::INV_SQRT2),
            };
            leaf(&mut b, w, kind);
            coeff *= s;
        }
        if zero {
            coeff = ExactScalar::ZERO;
        }
        terms.push(Term::new(coeff, b));
    }
    Ok(terms.try_into().expect("two branches"))
}

/// Replaces the boundaries of `part` by the vertices in `targets` (inputs
/// first, then outputs) after copying it into `d`.
pub fn splice(d: &mut Diagram, part: &Diagram, targets: &[VId]) {
    let bnds: Vec<VId> = part.inputs().iter().chain(part.outputs()).copied().collect();
    assert_eq!(bnds.len(), targets.len(), "one target per boundary");
    let map = d.absorb(part);
    let target_of: BTreeMap<VId, VId> = bnds.iter().map(|b| map[b]).zip(targets.iter().copied()).collect();
    for (&b, &t) in &target_of {
        if !d.contains_vertex(b) {
            continue;
        }
        let e = d.incident(b)[0];
        let ed = d.remove_edge(e).expect("live");
        let x = ed.other(b);
        let far = target_of.get(&x).copied().unwrap_or(x);
        d.add_edge(t, far, ed.kind).expect("live");
        d.remove_vertex(b).expect("live");
        if far != x {
            d.remove_vertex(x).expect("live");
        }
    }
}

/// Applies a star-edge rule to the given star edges.
pub fn apply_star_edge_rule(d: &Diagram, rule: &DecompositionRule, edges: &[EId]) -> Result<Vec<Term>, CatalogError> {
    if rule.legs != 2 * edges.len() {
        return Err(CatalogError::Arity { expected: rule.legs, found: 2 * edges.len() });
    }
    let mut ends = Vec::new();
    for &e in edges {
        let ed = d.try_edge(e).ok_or(CatalogError::NoEdge(e))?;
        if ed.kind != EdgeKind::Star || ed.is_loop() {
            return Err(CatalogError::NotStar(e));
        }
        ends.push((ed.a, ed.b));
    }
    let targets: Vec<VId> = ends.iter().map(|p| p.0).chain(ends.iter().map(|p| p.1)).collect();
    Ok(rule
        .branches
        .iter()
        .map(|(c, b)| {
            let mut t = d.clone();
            for &e in edges {
                t.remove_edge(e).expect("checked");
            }
            splice(&mut t, b, &targets);
            Term::new(*c, t)
        })
        .collect())
}

/// Applies a star-state rule to Z leaves attached by star edges, all with the
/// rule's phase.
pub fn apply_star_state_rule(d: &Diagram, rule: &DecompositionRule, leaves: &[VId]) -> Result<Vec<Term>, CatalogError> {
    if rule.legs != leaves.len() {
        return Err(CatalogError::Arity { expected: rule.legs, found: leaves.len() });
    }
    let want = VertexKind::Z(rule.phase.unwrap_or_default());
    let mut targets = Vec::new();
    for &u in leaves {
        let ok = d.try_kind(u) == Some(want)
            && d.incident(u).len() == 1
            && d.edge(d.incident(u)[0]).kind == EdgeKind::Star
            && !d.edge(d.incident(u)[0]).is_loop();
        if !ok {
            return Err(CatalogError::NotStarLeaf(u));
        }
        targets.push(d.edge(d.incident(u)[0]).other(u));
    }
    if let Some(&u) = leaves.iter().find(|u| targets.contains(u)) {
        return Err(CatalogError::NotStarLeaf(u));
    }
    Ok(rule
        .branches
        .iter()
        .map(|(c, b)| {
            let mut t = d.clone();
            for &u in leaves {
                t.remove_vertex(u).expect("checked");
            }
            splice(&mut t, b, &targets);
            Term::new(*c, t)
        })
        .collect())
}
