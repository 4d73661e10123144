use std::collections::BTreeSet;

use zx_core::{Diagram, EdgeKind, ExactScalar, VertexKind};

use crate::{DenseTensor, OracleError};

type M2 = [ExactScalar; 4];

fn m2(a: i64, b: i64, c: i64, d: i64, scale: ExactScalar) -> M2 {
    [a, b, c, d].map(|x| ExactScalar::from_int(x) * scale)
}

fn m2_mul(x: &M2, y: &M2) -> M2 {
    [x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]]
}

fn edge_matrix(k: EdgeKind) -> M2 {
    match k {
        EdgeKind::Plain => m2(1, 0, 0, 1, ExactScalar::ONE),
        EdgeKind::Hadamard => m2(1, 1, 1, -1, ExactScalar::INV_SQRT2),
        EdgeKind::Star => m2(1, 1, 1, 0, ExactScalar::ONE),
    }
}

/// Map from a vertex variable to the value on one of its legs. An X spider is
/// a Z spider with a Hadamard on every leg.
fn leg_matrix(k: VertexKind) -> M2 {
    match k {
        VertexKind::X(_) => edge_matrix(EdgeKind::Hadamard),
        _ => edge_matrix(EdgeKind::Plain),
    }
}

struct Factor {
    vars: Vec<usize>,
    table: Vec<ExactScalar>,
}

/// Product of `factors` over `scope`, summing out `sum_var` if given.
fn combine(factors: &[&Factor], scope: &[usize], sum_var: Option<usize>) -> Factor {
    let w = scope.len();
    let pos: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| {
            f.vars
                .iter()
                .map(|v| if Some(*v) == sum_var { w } else { scope.binary_search(v).expect("factor var in scope") })
                .collect()
        })
        .collect();
    let reps = if sum_var.is_some() { 2 } else { 1 };
    let mut table = vec![ExactScalar::ZERO; 1 << w];
    for (idx, slot) in table.iter_mut().enumerate() {
        let mut acc = ExactScalar::ZERO;
        for s in 0..reps {
            let ext = idx | (s << w);
            let mut prod = ExactScalar::ONE;
            for (f, p) in factors.iter().zip(&pos) {
                let mut fi = 0;
                for (j, &q) in p.iter().enumerate() {
                    fi |= ((ext >> q) & 1) << j;
                }
                let x = f.table[fi];
                if x.is_zero() {
                    prod = ExactScalar::ZERO;
                    break;
                }
                prod *= x;
            }
            acc += prod;
        }
        *slot = acc;
    }
    Factor { vars: scope.to_vec(), table }
}

pub(crate) fn contract(d: &Diagram, wire_limit: usize, width_limit: usize) -> Result<DenseTensor, OracleError> {
    d.validate()?;
    let (n_out, n_in) = (d.outputs().len(), d.inputs().len());
    if n_out + n_in > wire_limit {
        return Err(OracleError::WireLimit { wires: n_out + n_in, limit: wire_limit });
    }
    let nv = d.vertex_id_bound();
    let mut factors: Vec<Option<Factor>> = Vec::new();
    let mut var_factors: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let push = |f: Factor, factors: &mut Vec<Option<Factor>>, var_factors: &mut Vec<Vec<usize>>| {
        let id = factors.len();
        for &v in &f.vars {
            var_factors[v].push(id);
        }
        factors.push(Some(f));
    };

    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nv];
    let mut internal = Vec::new();
    for v in d.vertex_ids() {
        if let Some(p) = d.kind(v).phase() {
            internal.push(v);
            push(Factor { vars: vec![v], table: vec![ExactScalar::ONE, p.exp()] }, &mut factors, &mut var_factors);
        }
    }
    for e in d.edge_ids() {
        let ed = d.edge(e);
        let (la, lb) = (leg_matrix(d.kind(ed.a)), leg_matrix(d.kind(ed.b)));
        let m = m2_mul(&m2_mul(&la, &edge_matrix(ed.kind)), &lb);
        if ed.is_loop() {
            push(Factor { vars: vec![ed.a], table: vec![m[0], m[3]] }, &mut factors, &mut var_factors);
        } else {
            let (a, b) = (ed.a.min(ed.b), ed.a.max(ed.b));
            // table bit 0 is `a`, bit 1 is `b`
            let t = if a == ed.a { [m[0], m[2], m[1], m[3]] } else { [m[0], m[1], m[2], m[3]] };
            push(Factor { vars: vec![a, b], table: t.to_vec() }, &mut factors, &mut var_factors);
            nbrs[a].insert(b);
            nbrs[b].insert(a);
        }
    }

    let is_internal = {
        let mut m = vec![false; nv];
        for &v in &internal {
            m[v] = true;
        }
        m
    };
    let mut queue: BTreeSet<(usize, usize)> = internal.iter().map(|&v| (nbrs[v].len(), v)).collect();
    let mut scalar = d.scalar();
    while let Some((_, v)) = queue.pop_first() {
        let ids: Vec<usize> = var_factors[v].iter().copied().filter(|&i| factors[i].is_some()).collect();
        let scope: Vec<usize> = nbrs[v].iter().copied().collect();
        if scope.len() > width_limit {
            return Err(OracleError::WidthLimit { width: scope.len(), limit: width_limit });
        }
        let taken: Vec<Factor> = ids.iter().map(|&i| factors[i].take().expect("live")).collect();
        let refs: Vec<&Factor> = taken.iter().collect();
        let f = combine(&refs, &scope, Some(v));
        var_factors[v].clear();
        for &u in &scope {
            if is_internal[u] {
                queue.remove(&(nbrs[u].len(), u));
            }
            nbrs[u].remove(&v);
            for &w in &scope {
                if w != u {
                    nbrs[u].insert(w);
                }
            }
            if is_internal[u] {
                queue.insert((nbrs[u].len(), u));
            }
        }
        if scope.is_empty() {
            scalar *= f.table[0];
            if scalar.is_zero() {
                return Ok(DenseTensor::zeros(n_out, n_in));
            }
        } else {
            push(f, &mut factors, &mut var_factors);
        }
    }

    let rest: Vec<&Factor> = factors.iter().flatten().collect();
    let mut scope: Vec<usize> = d.outputs().iter().chain(d.inputs()).copied().collect();
    let order = scope.clone();
    scope.sort_unstable();
    let f = combine(&rest, &scope, None);
    // bit position in `f` for each wire in (outputs ++ inputs) order
    let bitpos: Vec<usize> = order.iter().map(|v| scope.binary_search(v).expect("boundary")).collect();
    let total = n_out + n_in;
    let mut data = vec![ExactScalar::ZERO; 1 << total];
    for (idx, slot) in data.iter_mut().enumerate() {
        let mut fi = 0;
        for (w, &b) in bitpos.iter().enumerate() {
            fi |= ((idx >> (total - 1 - w)) & 1) << b;
        }
        *slot = f.table[fi] * scalar;
    }
    Ok(DenseTensor::from_rows(n_out, n_in, data))
}
