//! Regenerates the rule fixtures in `rules/`.
//!
//! Star-edge branches are tensor products of three two-wire blocks:
//! `A = [[1,1],[1,-1]]` (a Hadamard edge times √2), `E = |1⟩⟨1|` and
//! `J = [[1,1],[1,1]]`, using `S = A + E` and its higher analogues.
//!
//! Star-state branches are permutation-symmetric stabilizer states, given by
//! their amplitude on each Hamming weight. Branch scalars are fitted so that
//! the published coefficients hold exactly; each rule is then checked by the
//! oracle before it is written.
//!
//! Run with `cargo run -p zx-catalog --example regen`.

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use zx_catalog::stabilizer::stabilizer_diagram;
use zx_catalog::{rule_to_text, scaled, star_edges_lhs, star_state_lhs, DecompositionRule};
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VertexKind};
use zx_oracle::Oracle;

fn s(a: i64, b: i64, c: i64, d: i64, k: u32) -> ExactScalar {
    ExactScalar::new(a, b, c, d, k)
}

fn g(a: i64, b: i64) -> ExactScalar {
    ExactScalar::gaussian(a, b)
}

fn to_c(x: ExactScalar) -> C {
    let (re, im) = x.to_f64();
    C::new(re, im)
}

#[derive(Clone, Copy)]
enum Block {
    A,
    E,
    J,
}

fn block(b: Block) -> Diagram {
    let mut d = Diagram::new();
    let i = d.add_input(0);
    let o = d.add_output(0);
    match b {
        Block::A => {
            d.add_edge(i, o, EdgeKind::Hadamard).unwrap();
            d.set_scalar(ExactScalar::SQRT2);
        }
        Block::E | Block::J => {
            let k = if matches!(b, Block::E) { VertexKind::X(Phase::PI) } else { VertexKind::Z(Phase::ZERO) };
            let x = d.add_vertex(k);
            let y = d.add_vertex(k);
            d.add_edge(i, x, EdgeKind::Plain).unwrap();
            d.add_edge(y, o, EdgeKind::Plain).unwrap();
            if matches!(b, Block::E) {
                d.set_scalar(ExactScalar::HALF);
            }
        }
    }
    d
}

fn blocks(bs: &[Block]) -> Diagram {
    bs.iter().fold(Diagram::new(), |acc, &b| acc.tensor(&block(b)))
}

/// `(coefficient in the sum, blocks, published ξ)`
fn star_edge_rule(k: usize, terms: &[(ExactScalar, &[Block], ExactScalar)]) -> DecompositionRule {
    let branches = terms
        .iter()
        .map(|&(c, bs, xi)| (xi, scaled(blocks(bs), c.checked_div(&xi).expect("unit"))))
        .collect::<Vec<_>>();
    DecompositionRule {
        id: format!("star_edge_{k}"),
        legs: 2 * k,
        phase: None,
        terms_p: terms.len() as u32,
        reduction_r: k as u32,
        lhs: star_edges_lhs(k),
        branches,
    }
}

fn solve(mut m: Vec<Vec<C>>, mut b: Vec<C>) -> Option<Vec<C>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))?;
        if m[piv][col].norm() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..n {
                    let t = m[col][c];
                    m[r][c] -= f * t;
                }
                let t = b[col];
                b[r] -= f * t;
            }
        }
    }
    Some((0..n).map(|i| b[i] / m[i][i]).collect())
}

/// Snaps to `ω^j · √2^e`.
fn snap(x: C) -> Option<ExactScalar> {
    let e = (2.0 * x.norm().log2()).round() as i32;
    let j = (x.arg() / (PI / 4.0)).round() as i64;
    let y = ExactScalar::omega(j).mul_sqrt2_pow(e);
    ((to_c(y) - x).norm() < 1e-9 * x.norm().max(1.0)).then_some(y)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn star_state_rule(
    id: &str,
    legs: usize,
    phase: Phase,
    xi: &[ExactScalar],
    weights: &[Vec<(i64, i64)>],
) -> DecompositionRule {
    let c = C::new(1.0, 0.0) + to_c(phase.exp());
    let target: Vec<C> = (0..=legs).map(|j| c.powi((legs - j) as i32)).collect();
    let cols: Vec<Vec<C>> =
        weights.iter().map(|w| w.iter().map(|&(a, b)| C::new(a as f64, b as f64)).collect()).collect();
    let m: Vec<Vec<C>> = (0..=legs).map(|r| cols.iter().map(|col| col[r]).collect()).collect();
    let a = solve(m, target).expect("symmetric basis");
    // pair each ξ with a basis state so that the branch scalar is ω^j·√2^e
    let mut pairing = None;
    for p in permutations(xi.len()) {
        let lam: Option<Vec<ExactScalar>> = (0..xi.len()).map(|i| snap(a[p[i]] / to_c(xi[i]))).collect();
        if let Some(l) = lam {
            pairing = Some((p, l));
            break;
        }
    }
    let (p, lam) = pairing.unwrap_or_else(|| panic!("{id}: no pairing with unit branch scalars"));
    let branches = (0..xi.len())
        .map(|i| {
            let w = &weights[p[i]];
            let amps: Vec<ExactScalar> = (0..1usize << legs)
                .map(|x| {
                    let (re, im) = w[x.count_ones() as usize];
                    g(re, im)
                })
                .collect();
            let d = stabilizer_diagram(&amps).unwrap_or_else(|e| panic!("{id}: branch {i}: {e}"));
            (xi[i], scaled(d, lam[i]))
        })
        .collect();
    DecompositionRule {
        id: id.to_string(),
        legs,
        phase: Some(phase),
        terms_p: xi.len() as u32,
        reduction_r: legs as u32,
        lhs: star_state_lhs(legs, phase),
        branches,
    }
}

fn w(xs: &[(i64, i64)]) -> Vec<(i64, i64)> {
    xs.to_vec()
}

fn main() {
    use Block::*;
    let q = ExactScalar::new(1, 0, 0, 0, 2);
    let half = ExactScalar::HALF;
    let one = ExactScalar::ONE;
    let mut rules = vec![
        star_edge_rule(1, &[(one, &[A], ExactScalar::SQRT2), (one, &[E], g(2, 0))]),
        star_edge_rule(
            2,
            &[
                (half, &[A, J], ExactScalar::INV_SQRT2),
                (half, &[J, A], ExactScalar::INV_SQRT2),
                (one, &[E, E], g(4, 0)),
            ],
        ),
        star_edge_rule(
            3,
            &[
                (q, &[J, A, A], s(0, 0, 1, 0, 2)),
                (q, &[A, J, A], s(0, 0, 1, 0, 2)),
                (q, &[A, A, J], s(0, 0, 1, 0, 2)),
                (q, &[J, J, J], ExactScalar::INV_SQRT2),
                (-one, &[E, E, E], g(8, 0)),
            ],
        ),
    ];

    let (o, i, m) = ((1, 0), (0, 1), (-1, 0));
    let z = (0, 0);
    let mi = (0, -1);
    let b30 = [w(&[z, z, z, o]), w(&[o, m, o, m]), w(&[z, o, z, o]), w(&[o, z, z, z])];
    let b3pm = [w(&[z, z, z, o]), w(&[z, o, z, o]), w(&[o, z, z, z]), w(&[o, z, o, z])];
    let b4pm =
        [w(&[o, o, m, m, o]), w(&[o, z, z, z, i]), w(&[z, o, z, m, z]), w(&[o, i, o, i, o]), w(&[z, o, z, o, z])];
    let b5pm = [
        w(&[o, z, z, z, z, z]),
        w(&[o, z, m, z, o, z]),
        w(&[o, z, z, z, z, m]),
        w(&[o, o, m, m, o, o]),
        w(&[z, o, z, o, z, o]),
        w(&[o, mi, o, mi, o, mi]),
    ];
    let b50 = [
        w(&[z, o, z, m, z, o]),
        w(&[z, z, z, z, z, o]),
        w(&[z, o, z, o, z, o]),
        w(&[o, z, o, z, o, z]),
        w(&[o, z, m, z, o, z]),
        w(&[o, z, z, z, z, z]),
    ];
    let (p0, pp, pm) = (Phase::ZERO, Phase::HALF_PI, Phase::MINUS_HALF_PI);
    rules.push(star_state_rule(
        "star_state_3_0",
        3,
        p0,
        &[g(3, 0), g(-1, 0), s(0, 0, 3, 0, 1), s(0, 0, -3, 0, 2)],
        &b30,
    ));
    rules.push(star_state_rule(
        "star_state_3_p",
        3,
        pp,
        &[s(1, 3, 0, 0, 1), s(1, -1, 0, 0, 1), s(0, 0, -3, 1, 2), s(0, 0, 1, -1, 2)],
        &b3pm,
    ));
    rules.push(star_state_rule(
        "star_state_3_m",
        3,
        pm,
        &[s(1, -3, 0, 0, 1), s(1, 1, 0, 0, 1), s(0, 0, -3, -1, 2), s(0, 0, 1, 1, 2)],
        &b3pm,
    ));
    rules.push(star_state_rule(
        "star_state_4_p",
        4,
        pp,
        &[g(-6, 2), s(-5, -5, 0, 0, 1), s(0, 0, -3, 1, 0), g(-6, 18), s(7, 9, 0, 0, 1)],
        &b4pm,
    ));
    rules.push(star_state_rule(
        "star_state_4_m",
        4,
        pm,
        &[g(-6, 18), s(-5, -5, 0, 0, 1), s(0, 0, -3, -11, 0), g(-6, 2), s(-1, -3, 0, 0, 1)],
        &b4pm,
    ));
    rules.push(star_state_rule(
        "star_state_5_0",
        5,
        p0,
        &[g(-192, 0), s(0, 0, 15, 0, 3), s(0, 0, 10, 0, 0), s(0, 0, 20, 0, 0), s(0, 0, 48, 0, 0), g(15, 0)],
        &b50,
    ));
    rules.push(star_state_rule(
        "star_state_5_p",
        5,
        pp,
        &[s(0, 0, 0, -5, 3), g(56, 8), g(-5, 0), g(-64, -32), s(0, 0, -7, 1, 0), g(-16, 48)],
        &b5pm,
    ));
    rules.push(star_state_rule(
        "star_state_5_m",
        5,
        pm,
        &[s(0, 0, 0, 5, 3), g(56, -8), g(-5, 0), g(-64, 32), s(0, 0, -1, -3, 0), g(-16, -48)],
        &b5pm,
    ));

    let oracle = Oracle::default();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("rules");
    for r in &rules {
        let ok = r.verify(&oracle).expect("contractible");
        println!("{:<16} terms {} beta {:.3} {}", r.id, r.terms_p, r.scaling(), if ok { "ok" } else { "FAILED" });
        assert!(ok, "{} does not verify", r.id);
        std::fs::write(dir.join(format!("{}.zxr", r.id)), rule_to_text(r)).expect("write fixture");
    }
}
