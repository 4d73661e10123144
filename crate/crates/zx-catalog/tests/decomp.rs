use proptest::prelude::*;
use zx_catalog::{
    apply_star_edge_rule, apply_star_state_rule, dynamic_decompose, elementary_decompose, Catalog, CatalogError,
};
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, Term, VId, VertexKind};
use zx_oracle::{contract, DenseTensor};

fn sum(terms: &[Term]) -> DenseTensor {
    let mut it = terms.iter().map(|t| contract(&t.diagram).unwrap().scaled(t.coeff));
    let first = it.next().unwrap();
    it.fold(first, |acc, x| acc.add(&x))
}

fn state(kind: VertexKind) -> (Diagram, VId) {
    let mut d = Diagram::new();
    let v = d.add_vertex(kind);
    let o = d.add_output(0);
    d.add_edge(v, o, EdgeKind::Plain).unwrap();
    (d, v)
}

#[test]
fn elementary_magic_state() {
    let (d, v) = state(VertexKind::Z(Phase::new(1)));
    let terms = elementary_decompose(&d, v).unwrap();
    assert_eq!(terms[0].coeff, ExactScalar::INV_SQRT2);
    assert_eq!(terms[1].coeff, ExactScalar::omega(1) * ExactScalar::INV_SQRT2);
    assert_eq!(sum(&terms), contract(&d).unwrap());
    for t in &terms {
        assert_eq!(t.diagram.phase(v), Phase::ZERO);
    }
}

#[test]
fn elementary_phase_zero_has_equal_coefficients() {
    let (d, v) = state(VertexKind::X(Phase::ZERO));
    let terms = elementary_decompose(&d, v).unwrap();
    assert_eq!(terms[0].coeff, terms[1].coeff);
    assert_eq!(sum(&terms), contract(&d).unwrap());
}

#[test]
fn elementary_rejects_boundary() {
    let (d, _) = state(VertexKind::Z(Phase::ZERO));
    let b = d.outputs()[0];
    assert_eq!(elementary_decompose(&d, b).unwrap_err(), CatalogError::Boundary(b));
    assert_eq!(elementary_decompose(&d, 99).unwrap_err(), CatalogError::NoVertex(99));
}

#[test]
fn dynamic_single_star_state() {
    let mut d = Diagram::new();
    let v = d.add_vertex(VertexKind::Z(Phase::new(1)));
    let o = d.add_output(0);
    d.add_edge(v, o, EdgeKind::Star).unwrap();
    let terms = dynamic_decompose(&d, v).unwrap();
    assert_eq!(sum(&terms), contract(&d).unwrap());
    assert!(terms.iter().all(|t| t.diagram.is_star_free()));
}

#[test]
fn dynamic_requires_stars() {
    let (d, v) = state(VertexKind::Z(Phase::ZERO));
    assert_eq!(dynamic_decompose(&d, v).unwrap_err(), CatalogError::NoStars(v));
    let (d, v) = state(VertexKind::X(Phase::ZERO));
    assert_eq!(dynamic_decompose(&d, v).unwrap_err(), CatalogError::NotZ(v));
}

#[test]
fn star_state_rule_in_context() {
    let cat = Catalog::shipped();
    for (legs, p) in [(3, Phase::ZERO), (4, Phase::HALF_PI), (5, Phase::MINUS_HALF_PI)] {
        // a line of spiders, each carrying one starred leaf
        let mut d = Diagram::new();
        let mut leaves = Vec::new();
        let mut prev = d.add_input(0);
        for q in 0..legs {
            let w = d.add_vertex(if q % 2 == 0 { VertexKind::Z(Phase::new(2)) } else { VertexKind::X(Phase::ZERO) });
            d.add_edge(prev, w, if q == 2 { EdgeKind::Hadamard } else { EdgeKind::Plain }).unwrap();
            let u = d.add_vertex(VertexKind::Z(p));
            d.add_edge(u, w, EdgeKind::Star).unwrap();
            leaves.push(u);
            prev = w;
        }
        let o = d.add_output(0);
        d.add_edge(prev, o, EdgeKind::Plain).unwrap();
        let rule = cat.star_state_rule(legs, p).unwrap();
        let terms = apply_star_state_rule(&d, rule, &leaves).unwrap();
        assert_eq!(terms.len(), rule.terms_p as usize);
        assert_eq!(sum(&terms), contract(&d).unwrap(), "{}", rule.id);
        assert!(terms.iter().all(|t| t.diagram.is_star_free()));
    }
}

#[test]
fn star_state_rule_checks_leaves() {
    let cat = Catalog::shipped();
    let rule = cat.star_state_rule(3, Phase::ZERO).unwrap();
    let (d, v) = state(VertexKind::Z(Phase::ZERO));
    assert!(matches!(apply_star_state_rule(&d, rule, &[v]), Err(CatalogError::Arity { expected: 3, found: 1 })));
    assert_eq!(apply_star_state_rule(&d, rule, &[v, v, v]).unwrap_err(), CatalogError::NotStarLeaf(v));
}

#[test]
fn star_state_rule_rejects_leaves_joined_to_each_other() {
    let cat = Catalog::shipped();
    let rule = cat.star_state_rule(3, Phase::ZERO).unwrap();
    let mut d = Diagram::new();
    let a = d.add_vertex(VertexKind::Z(Phase::ZERO));
    let b = d.add_vertex(VertexKind::Z(Phase::ZERO));
    d.add_edge(a, b, EdgeKind::Star).unwrap();
    let hub = d.add_vertex(VertexKind::X(Phase::ZERO));
    let c = d.add_vertex(VertexKind::Z(Phase::ZERO));
    d.add_edge(hub, c, EdgeKind::Star).unwrap();
    let o = d.add_output(0);
    d.add_edge(hub, o, EdgeKind::Plain).unwrap();
    assert_eq!(apply_star_state_rule(&d, rule, &[a, b, c]).unwrap_err(), CatalogError::NotStarLeaf(a));
}

#[test]
fn star_edge_rule_checks_edges() {
    let cat = Catalog::shipped();
    let (d, _) = state(VertexKind::Z(Phase::ZERO));
    let e = d.edge_ids().next().unwrap();
    assert_eq!(apply_star_edge_rule(&d, cat.star_edge_rule(1).unwrap(), &[e]).unwrap_err(), CatalogError::NotStar(e));
    assert!(matches!(apply_star_edge_rule(&d, cat.star_edge_rule(2).unwrap(), &[e]), Err(CatalogError::Arity { .. })));
}

#[derive(Debug, Clone)]
struct Spec {
    kinds: Vec<(bool, i64)>,
    edges: Vec<(usize, usize, u8)>,
    outs: Vec<usize>,
}

fn spec() -> impl Strategy<Value = Spec> {
    (2usize..6).prop_flat_map(|n| {
        (
            prop::collection::vec((any::<bool>(), 0i64..8), n),
            prop::collection::vec((0..n, 0..n, 0u8..3), 1..9),
            prop::collection::vec(0..n, 0..4),
        )
            .prop_map(|(kinds, edges, outs)| Spec { kinds, edges, outs })
    })
}

fn build(s: &Spec) -> (Diagram, Vec<VId>) {
    let mut d = Diagram::new();
    let vs: Vec<VId> = s
        .kinds
        .iter()
        .map(|&(z, p)| d.add_vertex(if z { VertexKind::Z(Phase::new(p)) } else { VertexKind::X(Phase::new(p)) }))
        .collect();
    for &(a, b, k) in &s.edges {
        let kind = [EdgeKind::Plain, EdgeKind::Hadamard, EdgeKind::Star][k as usize];
        d.add_edge(vs[a], vs[b], kind).unwrap();
    }
    for (q, &v) in s.outs.iter().enumerate() {
        let o = d.add_output(q as i32);
        d.add_edge(vs[v], o, EdgeKind::Plain).unwrap();
    }
    (d, vs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn elementary_sum_is_exact(s in spec()) {
        let (d, vs) = build(&s);
        let want = contract(&d).unwrap();
        for v in vs {
            prop_assert_eq!(&sum(&elementary_decompose(&d, v).unwrap()), &want);
        }
    }

    #[test]
    fn dynamic_sum_is_exact(s in spec()) {
        let (d, vs) = build(&s);
        let want = contract(&d).unwrap();
        for v in vs {
            if d.kind(v).is_z() && d.star_degree(v) > 0 {
                let terms = dynamic_decompose(&d, v).unwrap();
                prop_assert!(!terms[0].diagram.contains_vertex(v));
                prop_assert_eq!(&sum(&terms), &want);
            }
        }
    }

    #[test]
    fn star_edge_rules_are_exact_in_context(s in spec()) {
        let (d, _) = build(&s);
        let stars: Vec<_> = d.edge_ids().filter(|&e| d.edge(e).kind == EdgeKind::Star && !d.edge(e).is_loop()).collect();
        prop_assume!(!stars.is_empty());
        let cat = Catalog::shipped();
        let want = contract(&d).unwrap();
        for k in 1..=stars.len().min(3) {
            let terms = apply_star_edge_rule(&d, cat.star_edge_rule(k).unwrap(), &stars[..k]).unwrap();
            prop_assert_eq!(terms.len(), [2, 3, 5][k - 1]);
            prop_assert_eq!(&sum(&terms), &want);
        }
    }
}
