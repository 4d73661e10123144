use std::time::Instant;

use zx_catalog::{rule_to_text, star_state_id, Catalog, CatalogError, DecompositionRule};
use zx_core::{ExactScalar, Phase};
use zx_oracle::Oracle;

fn s(a: i64, b: i64, c: i64, d: i64, k: u32) -> ExactScalar {
    ExactScalar::new(a, b, c, d, k)
}

fn g(a: i64, b: i64) -> ExactScalar {
    ExactScalar::gaussian(a, b)
}

#[test]
fn shipped_catalog_verifies() {
    let t = Instant::now();
    let report = Catalog::shipped().verify_all();
    assert!(t.elapsed().as_secs_f64() < 10.0, "verification took {:?}", t.elapsed());
    assert_eq!(report.len(), 17);
    for e in &report {
        assert!(e.passed, "{} failed", e.id);
        assert_eq!(e.branches, e.terms_p as usize, "{}", e.id);
    }
}

#[test]
fn scaling_metadata_is_exact() {
    let cat = Catalog::shipped();
    let expected: &[(&str, u32, u32)] = &[
        ("star_edge_1", 2, 1),
        ("star_edge_2", 3, 2),
        ("star_edge_3", 5, 3),
        ("star_state_3_0", 4, 3),
        ("star_state_3_p", 4, 3),
        ("star_state_3_m", 4, 3),
        ("star_state_4_p", 5, 4),
        ("star_state_4_m", 5, 4),
        ("star_state_5_0", 6, 5),
        ("star_state_5_p", 6, 5),
        ("star_state_5_m", 6, 5),
    ];
    for &(id, p, r) in expected {
        let rule = cat.get(id).unwrap();
        assert_eq!((rule.terms_p, rule.reduction_r), (p, r), "{id}");
        assert_eq!(rule.branches.len(), p as usize);
        assert!((rule.scaling().exp2().powf(r as f64) - p as f64).abs() < 1e-9);
    }
    let approx = [
        ("star_edge_2", 0.792),
        ("star_edge_3", 0.774),
        ("star_state_3_0", 0.667),
        ("star_state_4_p", 0.580),
        ("star_state_5_0", 0.517),
    ];
    for (id, b) in approx {
        assert!((cat.get(id).unwrap().scaling() - b).abs() < 5e-4, "{id}");
    }
    assert_eq!(cat.get("star_edge_1").unwrap().scaling(), 1.0);
}

#[test]
fn star_edge_rule_counts() {
    let cat = Catalog::shipped();
    for (k, n) in [(1, 2), (2, 3), (3, 5)] {
        assert_eq!(cat.star_edge_rule(k).unwrap().branches.len(), n);
    }
    assert_eq!(cat.star_edge_rule(0).unwrap_err(), CatalogError::EdgeCount(0));
    assert_eq!(cat.star_edge_rule(4).unwrap_err(), CatalogError::EdgeCount(4));
}

#[test]
fn star_state_coefficients() {
    let cat = Catalog::shipped();
    let r = cat.star_state_rule(5, Phase::ZERO).unwrap();
    assert_eq!(
        r.coefficients(),
        vec![g(-192, 0), s(0, 0, 15, 0, 3), s(0, 0, 10, 0, 0), s(0, 0, 20, 0, 0), s(0, 0, 48, 0, 0), g(15, 0)]
    );
    let r = cat.star_state_rule(4, Phase::HALF_PI).unwrap();
    assert_eq!(r.coefficients(), vec![g(-6, 2), s(-5, -5, 0, 0, 1), s(0, 0, -3, 1, 0), g(-6, 18), s(7, 9, 0, 0, 1)]);
    let r = cat.star_state_rule(4, Phase::MINUS_HALF_PI).unwrap();
    let c = r.coefficients();
    assert_eq!(c.len(), 5);
    assert_eq!(c[0], g(-6, 18));
    assert_eq!(c[2], s(0, 0, -3, -11, 0));
    let r = cat.star_state_rule(3, Phase::ZERO).unwrap();
    assert_eq!(r.coefficients(), vec![g(3, 0), g(-1, 0), s(0, 0, 3, 0, 1), s(0, 0, -3, 0, 2)]);
    let r = cat.star_state_rule(5, Phase::MINUS_HALF_PI).unwrap();
    assert_eq!(r.coefficients()[0], s(0, 0, 0, 5, 3));
    assert_eq!(r.coefficients()[4], s(0, 0, -1, -3, 0));
}

#[test]
fn star_state_lookup_errors() {
    let cat = Catalog::shipped();
    assert_eq!(cat.star_state_rule(3, Phase::PI).unwrap_err(), CatalogError::Clifford(3));
    assert!(matches!(cat.star_state_rule(4, Phase::ZERO), Err(CatalogError::Unsupported { .. })));
    assert!(matches!(cat.star_state_rule(6, Phase::HALF_PI), Err(CatalogError::Unsupported { .. })));
    assert!(matches!(cat.star_state_rule(3, Phase::new(1)), Err(CatalogError::Unsupported { .. })));
    assert_eq!(star_state_id(4, Phase::MINUS_HALF_PI).unwrap(), "star_state_4_m");
}

#[test]
fn corrupted_coefficient_fails_only_that_rule() {
    let mut rules: Vec<DecompositionRule> = Catalog::shipped().rules().to_vec();
    let i = rules.iter().position(|r| r.id == "star_state_4_p").unwrap();
    rules[i].branches[1].0 += ExactScalar::ONE;
    let report = Catalog::new(rules).verify_all();
    for e in report {
        assert_eq!(e.passed, e.id != "star_state_4_p", "{}", e.id);
    }
}

#[test]
fn dropped_branch_fails() {
    let mut rule = Catalog::shipped().star_edge_rule(2).unwrap().clone();
    rule.branches.pop();
    assert!(!rule.verify(&Oracle::default()).unwrap());
}

#[test]
fn empty_catalog_report_is_empty() {
    assert!(Catalog::new(vec![]).verify_all().is_empty());
}

#[test]
fn star_rule_branches_are_stabilizer() {
    for r in Catalog::shipped().rules().iter().filter(|r| r.id.starts_with("star_")) {
        for (i, (_, b)) in r.branches.iter().enumerate() {
            assert!(b.is_star_free() && b.is_clifford(), "{} branch {i}", r.id);
        }
    }
}

#[test]
fn load_dir_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let shipped = Catalog::shipped();
    for r in shipped.rules() {
        std::fs::write(dir.path().join(format!("{}.zxr", r.id)), rule_to_text(r)).unwrap();
    }
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let loaded = Catalog::load_dir(dir.path()).unwrap();
    assert_eq!(loaded.rules().len(), shipped.rules().len());
    for r in shipped.rules() {
        let l = loaded.get(&r.id).unwrap();
        assert_eq!(l.coefficients(), r.coefficients());
        assert_eq!((l.terms_p, l.reduction_r, l.legs, l.phase), (r.terms_p, r.reduction_r, r.legs, r.phase));
    }
    assert!(loaded.verify_all().iter().all(|e| e.passed));
}

#[test]
fn load_dir_reports_bad_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.zxr"), "zxrule 1\nid x\nlegs two\n").unwrap();
    match Catalog::load_dir(dir.path()) {
        Err(CatalogError::Load { path, .. }) => assert!(path.ends_with("bad.zxr")),
        other => panic!("{other:?}"),
    }
    assert!(matches!(Catalog::load_dir(&dir.path().join("missing")), Err(CatalogError::Load { .. })));
}
