use proptest::prelude::*;
use proptest::test_runner::Config;
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VId, VertexKind};
use zx_oracle::contract;
use zx_rewrite::{apply_rewrite, find_matches, partial_simplify, RewriteKind};

fn ek(c: u8) -> EdgeKind {
    match c % 4 {
        0 | 1 => EdgeKind::Plain,
        2 => EdgeKind::Hadamard,
        _ => EdgeKind::Star,
    }
}

/// Small random diagrams biased towards the local patterns the rules look for.
fn random_diagram() -> impl Strategy<Value = Diagram> {
    let spiders = prop::collection::vec((any::<bool>(), 0u8..12), 2..7);
    let edges = prop::collection::vec((0usize..32, 0usize..32, 0u8..8), 1..9);
    let leaves = prop::collection::vec((0usize..32, any::<bool>(), 0u8..4, 0u8..4), 0..4);
    let io = (0usize..3, 1usize..3);
    let bnds = prop::collection::vec((0usize..32, 0u8..4), 5);
    (spiders, edges, leaves, io, bnds).prop_map(|(sp, es, ls, (ni, no), bs)| {
        let mut d = Diagram::new();
        let vs: Vec<VId> = sp
            .iter()
            .map(|&(z, p)| {
                // phases concentrated on multiples of π/2
                let p = Phase::new(if p >= 8 { 0 } else { p as i64 });
                d.add_vertex(if z { VertexKind::Z(p) } else { VertexKind::X(p) })
            })
            .collect();
        let pick = |i: usize| vs[i % vs.len()];
        for (a, b, k) in es {
            // mostly non-loop edges
            let (a, b) = (pick(a), pick(if a % 5 == 0 { a } else { b }));
            d.add_edge(a, b, if k >= 4 { EdgeKind::Plain } else { ek(k) }).unwrap();
        }
        for (t, z, p, k) in ls {
            let kind =
                if z { VertexKind::Z(Phase::new(2 * p as i64)) } else { VertexKind::X(Phase::new(2 * p as i64)) };
            let u = d.add_vertex(kind);
            d.add_edge(u, pick(t), ek(k)).unwrap();
        }
        for (j, &(t, k)) in bs.iter().take(ni + no).enumerate() {
            let b = if j < ni { d.add_input(j as i32) } else { d.add_output((j - ni) as i32) };
            d.add_edge(b, pick(t), ek(k)).unwrap();
        }
        d
    })
}

fn check_kind(kind: RewriteKind) {
    let mut cfg = Config::with_cases(500);
    cfg.max_global_rejects = 200_000;
    cfg.failure_persistence = None;
    proptest!(cfg, |(d in random_diagram(), pick in any::<usize>())| {
        let sites = find_matches(&d, kind);
        prop_assume!(!sites.is_empty());
        let s = &sites[pick % sites.len()];
        let after = apply_rewrite(&d, s).unwrap();
        after.validate().unwrap();
        prop_assert_eq!(contract(&after).unwrap(), contract(&d).unwrap(), "{:?} at {:?}", kind, s);
    });
}

macro_rules! soundness {
    ($($name:ident => $kind:ident),* $(,)?) => {
        $(#[test] fn $name() { check_kind(RewriteKind::$kind); })*
    };
}

soundness! {
    sound_spider_fusion => SpiderFusion,
    sound_color_change => ColorChange,
    sound_pi_commutation => PiCommutation,
    sound_state_copy => StateCopy,
    sound_bialgebra => Bialgebra,
    sound_hh_cancel => HHCancel,
    sound_hopf => Hopf,
    sound_identity_removal => IdentityRemoval,
    sound_euler => EulerDecomposition,
    sound_star_state_x_pi => StarStateXPi,
    sound_star_state_x0 => StarStateX0,
    sound_star_state_z_pi => StarStateZPi,
}

proptest! {
    #![proptest_config(Config { cases: 500, failure_persistence: None, ..Config::default() })]

    #[test]
    fn partial_simplify_sound_and_idempotent(d in random_diagram()) {
        let s = partial_simplify(&d);
        s.validate().unwrap();
        prop_assert_eq!(contract(&s).unwrap(), contract(&d).unwrap());
        if !s.scalar().is_zero() {
            let s2 = partial_simplify(&s);
            prop_assert_eq!(zx_core::text::to_text(&s2), zx_core::text::to_text(&s));
        }
    }
}

#[test]
fn zero_scalar_short_circuits() {
    let mut d = Diagram::new();
    d.add_vertex(VertexKind::X(Phase::PI));
    let z = d.add_vertex(VertexKind::Z(Phase::new(1)));
    let o = d.add_output(0);
    d.add_edge(z, o, EdgeKind::Star).unwrap();
    let s = partial_simplify(&d);
    assert_eq!(s.scalar(), ExactScalar::ZERO);
}
