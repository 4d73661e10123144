use proptest::prelude::*;
use zx_circuits::*;
use zx_core::ExactScalar;
use zx_oracle::{contract, statevector, DenseTensor};

/// Dense unitary by direct gate-matrix products; wire 0 is the most
/// significant bit.
fn matrix(c: &Circuit) -> DenseTensor {
    let n = c.qubits;
    let dim = 1usize << n;
    let bit = |x: usize, q: usize| x >> (n - 1 - q) & 1 == 1;
    let flip = |x: usize, q: usize| x ^ (1 << (n - 1 - q));
    let mut u = DenseTensor::identity(n);
    for g in &c.with_diffusion_expanded().gates {
        let mut m = DenseTensor::zeros(n, n);
        for x in 0..dim {
            match g {
                Gate::H { target } => {
                    let y = flip(x, *target);
                    let sign = if bit(x, *target) { -ExactScalar::INV_SQRT2 } else { ExactScalar::INV_SQRT2 };
                    m.set(x, x, sign);
                    m.set(y, x, ExactScalar::INV_SQRT2);
                }
                Gate::X { target } => m.set(flip(x, *target), x, ExactScalar::ONE),
                Gate::Cnot { control, target } => {
                    let y = if bit(x, *control) { flip(x, *target) } else { x };
                    m.set(y, x, ExactScalar::ONE);
                }
                Gate::Mct { controls, target } => {
                    let y = if controls.iter().all(|&q| bit(x, q)) { flip(x, *target) } else { x };
                    m.set(y, x, ExactScalar::ONE);
                }
            }
        }
        u = m.matmul(&u);
    }
    u
}

#[test]
fn toffoli_matrix() {
    let mut c = Circuit::new(3);
    c.mct(&[0, 1], 2);
    let t = contract(&to_diagram(&c).unwrap()).unwrap();
    let mut want = DenseTensor::identity(3);
    for (r, col) in [(6, 6), (7, 7), (6, 7), (7, 6)] {
        want.set(r, col, if r == col { ExactScalar::ZERO } else { ExactScalar::ONE });
    }
    assert_eq!(t, want);
}

#[test]
fn cnot_matrix() {
    let mut c = Circuit::new(2);
    c.cx(0, 1);
    let want = DenseTensor::from_ints(2, 2, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0]);
    assert_eq!(contract(&to_diagram(&c).unwrap()).unwrap(), want);
}

#[test]
fn empty_circuit_is_identity() {
    for n in 1..4 {
        assert_eq!(contract(&to_diagram(&Circuit::new(n)).unwrap()).unwrap(), DenseTensor::identity(n));
    }
}

#[test]
fn mct_truth_table() {
    for k in 1..=6 {
        let mut c = Circuit::new(k + 1);
        c.mct(&(0..k).collect::<Vec<_>>(), k);
        let d = to_diagram(&c).unwrap();
        assert_eq!(d.count_edges(zx_core::EdgeKind::Star), k + 1);
        let t = contract(&d).unwrap();
        let dim = 1 << (k + 1);
        for x in 0..dim {
            let all = x >> 1 == (1 << k) - 1;
            let y = if all { x ^ 1 } else { x };
            for r in 0..dim {
                let want = if r == y { ExactScalar::ONE } else { ExactScalar::ZERO };
                assert_eq!(t.get(r, x), want, "k={k} x={x} r={r}");
            }
        }
    }
}

#[test]
fn mct_with_scattered_wires() {
    let mut c = Circuit::new(5);
    c.mct(&[4, 1, 2], 0).h(3).mct(&[0, 3], 2);
    assert_eq!(contract(&to_diagram(&c).unwrap()).unwrap(), matrix(&c));
}

#[test]
fn translation_sets_wire_metadata() {
    let mut c = Circuit::new(3);
    c.x(0).cx(0, 1).mct(&[0, 1], 2);
    let d = to_diagram(&c).unwrap();
    d.validate().unwrap();
    for v in d.vertex_ids() {
        if d.kind(v).is_boundary() {
            continue;
        }
        assert!(d.row(v) >= 1 && d.row(v) <= 3);
        assert!(d.qubit(v) >= -1 && d.qubit(v) < 3);
    }
    let not = d.vertex_ids().find(|&v| d.row(v) == 1 && !d.kind(v).is_boundary()).unwrap();
    assert_eq!(d.qubit(not), 0);
}

#[test]
fn diffusion_is_reflection_about_uniform_state() {
    for n in 2..=4 {
        let t = contract(&diffusion_diagram(n).unwrap()).unwrap();
        let dim = 1usize << n;
        // 2|s⟩⟨s| − I with |s⟩⟨s| = 1/2ⁿ everywhere
        let s = ExactScalar::sqrt2_pow(-(n as i32) * 2);
        let mut want = DenseTensor::zeros(n, n);
        for r in 0..dim {
            for c in 0..dim {
                let v = s + s - if r == c { ExactScalar::ONE } else { ExactScalar::ZERO };
                want.set(r, c, v);
            }
        }
        assert_eq!(t.ratio_to(&want), Some(-ExactScalar::ONE), "n={n}");
        // |s⟩ is fixed up to that scalar
        let uniform = DenseTensor::from_rows(n, 0, vec![ExactScalar::ONE; dim]);
        let img = t.matmul(&uniform);
        assert_eq!(img.ratio_to(&uniform), Some(-ExactScalar::ONE));
    }
    assert_eq!(diffusion_diagram(1).unwrap_err(), CircuitError::TooFewQubits { needed: 2, got: 1 });
}

#[test]
fn zero_inputs_give_first_column() {
    let mut c = Circuit::new(3);
    c.x(0).h(1).mct(&[0, 1], 2);
    let sv = statevector(&with_zero_inputs(&to_diagram(&c).unwrap())).unwrap();
    let m = matrix(&c);
    assert_eq!(sv, (0..8).map(|r| m.get(r, 0)).collect::<Vec<_>>());
}

#[test]
fn json_example() {
    let c = parse_circuit(r#"{"qubits":3,"gates":[{"type":"mct","controls":[0,1],"target":2}]}"#).unwrap();
    assert_eq!(c.gates, vec![Gate::Mct { controls: vec![0, 1], target: 2 }]);
    assert_eq!(parse_circuit(&c.to_json()).unwrap(), c);
    let c = parse_circuit(r#"{"qubits":2,"gates":[{"type":"x","target":0},{"type":"h","target":1},{"type":"cx","control":0,"target":1}]}"#).unwrap();
    assert_eq!(c.gates.len(), 3);
}

#[test]
fn json_rejections() {
    let bad = |s: &str| parse_circuit(s).unwrap_err();
    assert_eq!(
        bad(r#"{"qubits":3,"gates":[{"type":"mct","controls":[0,2],"target":2}]}"#),
        CircuitError::ControlIsTarget { gate: 0 }
    );
    assert_eq!(
        bad(r#"{"qubits":2,"gates":[{"type":"cx","control":1,"target":1}]}"#),
        CircuitError::ControlIsTarget { gate: 0 }
    );
    assert_eq!(
        bad(r#"{"qubits":2,"gates":[{"type":"x","target":2}]}"#),
        CircuitError::QubitOutOfRange { gate: 0, qubit: 2 }
    );
    assert_eq!(
        bad(r#"{"qubits":3,"gates":[{"type":"mct","controls":[],"target":2}]}"#),
        CircuitError::EmptyControls { gate: 0 }
    );
    assert_eq!(
        bad(r#"{"qubits":3,"gates":[{"type":"mct","controls":[1,1],"target":2}]}"#),
        CircuitError::DuplicateControl { gate: 0, qubit: 1 }
    );
    assert_eq!(bad(r#"{"qubits":0,"gates":[]}"#), CircuitError::NoQubits);
    match bad("{\"qubits\":2,\n\"gates\":[{\"type\":\"swap\",\"target\":0}]}") {
        CircuitError::Json { line, .. } => assert_eq!(line, 2),
        e => panic!("{e:?}"),
    }
}

#[test]
fn generator_examples() {
    let c = random_mct_dense(5, 0, 0, 1, 3).unwrap();
    assert_eq!(c.gates.len(), 1);
    assert!(matches!(c.gates[0], Gate::Mct { .. }));
    assert_eq!(random_mct_dense(8, 5, 5, 3, 42).unwrap(), random_mct_dense(8, 5, 5, 3, 42).unwrap());
    assert_ne!(random_mct_dense(8, 5, 5, 3, 42).unwrap(), random_mct_dense(8, 5, 5, 3, 43).unwrap());
    let c = random_mct_dense(20, 240, 0, 6, 11).unwrap();
    assert_eq!(c.gates.len(), 246);
    for g in &c.gates {
        if let Gate::Mct { target, .. } = g {
            assert!(*target >= 15);
        }
    }
    assert_eq!(random_mct_dense(2, 1, 0, 0, 0).unwrap_err(), CircuitError::TooFewQubits { needed: 3, got: 2 });
    let cfg = MctDenseConfig { min_controls: 2, max_controls: Some(3) };
    let c = random_mct_dense_with(10, 0, 0, 20, 5, cfg).unwrap();
    assert!(c.gates.iter().all(|g| matches!(g, Gate::Mct { controls, .. } if (2..=3).contains(&controls.len()))));
}

#[test]
fn causal_graph_cycles() {
    let theta = CausalGraph { vertices: 5, edges: vec![(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)] };
    let cycles = theta.cycles();
    assert_eq!(cycles.len(), 3);
    assert!(cycles.iter().all(|c| c.len() == 4));
    let acyclic = (0u32..64).filter(|m| theta.is_acyclic(&(0..6).map(|i| m >> i & 1 == 1).collect::<Vec<_>>())).count();
    assert_eq!(acyclic, 46);
}

#[test]
fn query_circuit_marks_acyclic_orientations() {
    let f = load_fixture("two_eloop_6e").unwrap();
    let graph = CausalGraph { vertices: 5, edges: vec![(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)] };
    assert_eq!(f.circuit.qubits, 10);
    assert_eq!(f.expected_peaks, Some(23));
    assert!(!f.verified);
    // the full run from |0…0⟩: marked orientations are the 23 peaks
    let sv = statevector(&with_zero_inputs(&to_diagram(&f.circuit).unwrap())).unwrap();
    let p: Vec<f64> = sv.iter().map(|a| a.norm_sqr_f64()).collect();
    let (lo, hi) = p.iter().fold((f64::MAX, 0.0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    let peaks: Vec<usize> = (0..p.len()).filter(|&i| p[i] > (lo + hi) / 2.0).collect();
    assert_eq!(peaks.len(), 23);
    for i in peaks {
        // wire 0 is the most significant of the 10 bits; ancillas and output are clean
        assert_eq!(i & 0b1111, 0);
        let bits: Vec<bool> = (0..6).map(|q| i >> (9 - q) & 1 == 1).collect();
        assert!(!bits[0] && graph.is_acyclic(&bits));
    }
    assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
}

#[test]
fn fixtures_load() {
    assert_eq!(fixture_names(), vec!["two_eloop_6e", "four_eloop_12e"]);
    let f = load_fixture("four_eloop_12e").unwrap();
    assert_eq!(f.circuit.qubits, 19);
    assert_eq!(f.circuit.diffusion.as_deref(), Some(&(0..12).collect::<Vec<_>>()[..]));
    assert_eq!(f.expected_terms["greedy"], 1810);
    assert!(matches!(load_fixture("nope"), Err(CircuitError::UnknownFixture(_))));
}

fn arb_circuit() -> impl Strategy<Value = Circuit> {
    (2usize..=6).prop_flat_map(|n| {
        let gate = (0u8..4, 0..n, prop::collection::vec(0..n, 1..n)).prop_map(move |(k, t, cs)| match k {
            0 => Gate::X { target: t },
            1 => Gate::H { target: t },
            2 => Gate::Cnot { control: (t + 1) % n, target: t },
            _ => {
                let mut controls: Vec<usize> = cs.into_iter().filter(|&c| c != t).collect();
                controls.sort_unstable();
                controls.dedup();
                if controls.is_empty() {
                    controls.push((t + 1) % n);
                }
                Gate::Mct { controls, target: t }
            }
        });
        prop::collection::vec(gate, 0..=12).prop_map(move |gates| Circuit { qubits: n, gates, diffusion: None })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn translation_is_sound(c in arb_circuit()) {
        prop_assert_eq!(contract(&to_diagram(&c).unwrap()).unwrap(), matrix(&c));
    }

    #[test]
    fn generator_invariants(q in 3usize..24, nn in 0usize..30, nc in 0usize..30, nm in 0usize..10, seed in any::<u64>()) {
        let c = random_mct_dense(q, nn, nc, nm, seed).unwrap();
        c.validate().unwrap();
        let count = |f: fn(&Gate) -> bool| c.gates.iter().filter(|g| f(g)).count();
        prop_assert_eq!(count(|g| matches!(g, Gate::X { .. })), nn);
        prop_assert_eq!(count(|g| matches!(g, Gate::Cnot { .. })), nc);
        prop_assert_eq!(count(|g| matches!(g, Gate::Mct { .. })), nm);
        let bottom = q.div_ceil(4);
        for g in &c.gates {
            if let Gate::Mct { controls, target } = g {
                prop_assert!(*target >= q - bottom);
                prop_assert!(controls.len() >= 2);
            }
        }
        prop_assert_eq!(c, random_mct_dense(q, nn, nc, nm, seed).unwrap());
    }
}
