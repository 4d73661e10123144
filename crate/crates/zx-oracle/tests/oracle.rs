use proptest::prelude::*;
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VId, VertexKind};
use zx_oracle::{contract, statevector, verify_rule, DenseTensor, OracleError};

fn s(x: i64) -> ExactScalar {
    ExactScalar::from_int(x)
}

fn wire_with(kind: VertexKind, e1: EdgeKind, e2: EdgeKind) -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input(0);
    let v = d.add_vertex(kind);
    let o = d.add_output(0);
    d.add_edge(i, v, e1).unwrap();
    d.add_edge(v, o, e2).unwrap();
    d
}

fn state(kind: VertexKind) -> Diagram {
    let mut d = Diagram::new();
    let v = d.add_vertex(kind);
    let o = d.add_output(0);
    d.add_edge(v, o, EdgeKind::Plain).unwrap();
    d
}

#[test]
fn z_wire_is_identity() {
    let d = wire_with(VertexKind::Z(Phase::ZERO), EdgeKind::Plain, EdgeKind::Plain);
    assert_eq!(contract(&d).unwrap(), DenseTensor::identity(1));
}

#[test]
fn bare_star_edge() {
    let mut d = Diagram::new();
    let i = d.add_input(0);
    let o = d.add_output(0);
    d.add_edge(i, o, EdgeKind::Star).unwrap();
    assert_eq!(contract(&d).unwrap(), DenseTensor::from_ints(1, 1, &[1, 1, 1, 0]));
}

#[test]
fn isolated_spiders() {
    let mut d = Diagram::new();
    d.add_vertex(VertexKind::X(Phase::PI));
    assert!(contract(&d).unwrap().is_zero());
    let mut d = Diagram::new();
    d.add_vertex(VertexKind::Z(Phase::HALF_PI));
    assert_eq!(contract(&d).unwrap(), DenseTensor::scalar(ExactScalar::gaussian(1, 1)));
}

#[test]
fn basic_states() {
    assert_eq!(statevector(&state(VertexKind::Z(Phase::ZERO))).unwrap(), vec![s(1), s(1)]);
    assert_eq!(statevector(&state(VertexKind::X(Phase::PI))).unwrap(), vec![s(0), ExactScalar::SQRT2]);
    assert_eq!(statevector(&state(VertexKind::X(Phase::ZERO))).unwrap(), vec![ExactScalar::SQRT2, s(0)]);
}

#[test]
fn hadamard_edge() {
    let d = wire_with(VertexKind::Z(Phase::ZERO), EdgeKind::Hadamard, EdgeKind::Plain);
    let h = DenseTensor::from_ints(1, 1, &[1, 1, 1, -1]).scaled(ExactScalar::INV_SQRT2);
    assert_eq!(contract(&d).unwrap(), h);
}

#[test]
fn x_spider_matches_definition() {
    // X_3[α](x) = (1 + e^{iα}(-1)^{|x|}) / √2^3
    for a in 0..8 {
        let p = Phase::new(a);
        let mut d = Diagram::new();
        let v = d.add_vertex(VertexKind::X(p));
        for q in 0..3 {
            let o = d.add_output(q);
            d.add_edge(v, o, EdgeKind::Plain).unwrap();
        }
        let sv = statevector(&d).unwrap();
        for (x, amp) in sv.iter().enumerate() {
            let sign = if (x as u32).count_ones() % 2 == 0 { s(1) } else { s(-1) };
            assert_eq!(*amp, (s(1) + p.exp() * sign).mul_sqrt2_pow(-3));
        }
    }
}

#[test]
fn ghz() {
    // H on q0, CNOT 0->1, CNOT 0->2 applied to |000>
    let mut d = Diagram::new();
    let mut ins = Vec::new();
    for _ in 0..3 {
        ins.push(d.add_vertex(VertexKind::X(Phase::ZERO)));
    }
    let c = d.add_vertex(VertexKind::Z(Phase::ZERO));
    d.add_edge(ins[0], c, EdgeKind::Hadamard).unwrap();
    let o0 = d.add_output(0);
    d.add_edge(c, o0, EdgeKind::Plain).unwrap();
    for q in 1..3 {
        let x = d.add_vertex(VertexKind::X(Phase::ZERO));
        d.add_edge(ins[q], x, EdgeKind::Plain).unwrap();
        d.add_edge(c, x, EdgeKind::Plain).unwrap();
        let o = d.add_output(q as i32);
        d.add_edge(x, o, EdgeKind::Plain).unwrap();
    }
    let sv = statevector(&d).unwrap();
    let a = sv[0];
    assert!(!a.is_zero());
    assert_eq!(sv[7], a);
    assert!(sv[1..7].iter().all(|x| x.is_zero()));
}

#[test]
fn z_pi_state_into_x_effect() {
    let zs = state(VertexKind::Z(Phase::PI));
    let mut xe = Diagram::new();
    let i = xe.add_input(0);
    let x = xe.add_vertex(VertexKind::X(Phase::ZERO));
    xe.add_edge(i, x, EdgeKind::Plain).unwrap();
    let d = zs.compose(&xe).unwrap();
    // <+|·(|0> - |1>)·√2-normalisation: X(0) effect is √2<0|
    assert_eq!(contract(&d).unwrap(), DenseTensor::scalar(ExactScalar::SQRT2));
}

#[test]
fn verify_rule_star_edge_one() {
    // S = A + E/... : bare star = Hadamard·√2 + ½·(X(π) effect ⊗ X(π) state)
    let mut lhs = Diagram::new();
    let i = lhs.add_input(0);
    let o = lhs.add_output(0);
    lhs.add_edge(i, o, EdgeKind::Star).unwrap();
    let mut b1 = Diagram::new();
    let (i, o) = (b1.add_input(0), b1.add_output(0));
    b1.add_edge(i, o, EdgeKind::Hadamard).unwrap();
    let mut b2 = Diagram::new();
    let (i, o) = (b2.add_input(0), b2.add_output(0));
    let (x1, x2) = (b2.add_vertex(VertexKind::X(Phase::PI)), b2.add_vertex(VertexKind::X(Phase::PI)));
    b2.add_edge(i, x1, EdgeKind::Plain).unwrap();
    b2.add_edge(x2, o, EdgeKind::Plain).unwrap();
    let good = [(ExactScalar::SQRT2, b1.clone()), (ExactScalar::HALF, b2.clone())];
    assert!(verify_rule(&lhs, &good).unwrap());
    let bad = [(ExactScalar::SQRT2, b1), (ExactScalar::ONE, b2)];
    assert!(!verify_rule(&lhs, &bad).unwrap());
    assert!(matches!(verify_rule(&lhs, &[(ExactScalar::ONE, Diagram::new())]), Err(OracleError::Arity { .. })));
}

#[test]
fn wire_limit() {
    let d = Diagram::identity(12);
    assert!(matches!(contract(&d), Err(OracleError::WireLimit { .. })));
}

// Random diagrams over a few spiders with the given boundary counts.
fn random_diagram(n_in: usize, n_out: usize) -> impl Strategy<Value = Diagram> {
    let spiders = prop::collection::vec((any::<bool>(), 0i64..8), 1..5);
    let edges = prop::collection::vec((0usize..16, 0usize..16, 0u8..3), 0..7);
    let bnds = prop::collection::vec((0usize..16, 0u8..3), n_in + n_out);
    let scal = (-3i64..4, -3i64..4, 0u32..3);
    (spiders, edges, bnds, scal).prop_map(move |(sp, es, bs, (a, b, k))| {
        let kind = |c: u8| match c {
            0 => EdgeKind::Plain,
            1 => EdgeKind::Hadamard,
            _ => EdgeKind::Star,
        };
        let mut d = Diagram::new();
        let vs: Vec<VId> = sp
            .iter()
            .map(|&(z, p)| d.add_vertex(if z { VertexKind::Z(Phase::new(p)) } else { VertexKind::X(Phase::new(p)) }))
            .collect();
        for (a, b, k) in es {
            d.add_edge(vs[a % vs.len()], vs[b % vs.len()], kind(k)).unwrap();
        }
        for (j, (t, k)) in bs.into_iter().enumerate() {
            let bv = if j < n_in { d.add_input(j as i32) } else { d.add_output((j - n_in) as i32) };
            d.add_edge(bv, vs[t % vs.len()], kind(k)).unwrap();
        }
        let sc = ExactScalar::new(a, b, 0, 0, k);
        d.set_scalar(if sc.is_zero() { ExactScalar::ONE } else { sc });
        d
    })
}

fn shuffled(d: &Diagram, seed: u64) -> Diagram {
    // rebuild with reversed vertex and edge insertion order
    let mut out = Diagram::new();
    let mut map = std::collections::BTreeMap::new();
    let vs: Vec<VId> = d.vertex_ids().collect();
    for &v in vs.iter().rev() {
        map.insert(v, out.add_vertex(d.kind(v)));
    }
    let mut es: Vec<_> = d.edge_ids().collect();
    let n = es.len().max(1);
    es.rotate_left((seed as usize) % n);
    es.reverse();
    for e in es {
        let ed = d.edge(e);
        if seed % 2 == 0 {
            out.add_edge(map[&ed.a], map[&ed.b], ed.kind).unwrap();
        } else {
            out.add_edge(map[&ed.b], map[&ed.a], ed.kind).unwrap();
        }
    }
    out.set_inputs(d.inputs().iter().map(|v| map[v]).collect());
    out.set_outputs(d.outputs().iter().map(|v| map[v]).collect());
    out.set_scalar(d.scalar());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn compose_is_matrix_product(a in random_diagram(2, 2), b in random_diagram(2, 1)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(contract(&ab).unwrap(), contract(&b).unwrap().matmul(&contract(&a).unwrap()));
    }

    #[test]
    fn tensor_is_kron(a in random_diagram(1, 2), b in random_diagram(1, 1)) {
        prop_assert_eq!(contract(&a.tensor(&b)).unwrap(), contract(&a).unwrap().kron(&contract(&b).unwrap()));
    }

    #[test]
    fn insertion_order_irrelevant(a in random_diagram(1, 2), seed in 0u64..100) {
        prop_assert_eq!(contract(&shuffled(&a, seed)).unwrap(), contract(&a).unwrap());
    }

    #[test]
    fn compose_associative(a in random_diagram(1, 1), b in random_diagram(1, 1), c in random_diagram(1, 1)) {
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(contract(&l).unwrap(), contract(&r).unwrap());
    }
}
