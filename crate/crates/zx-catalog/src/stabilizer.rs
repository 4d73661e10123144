//! Builds a ZX diagram for a stabilizer state given by its amplitudes.
//!
//! A stabilizer state has affine support `x0 ⊕ span(g_1..g_r)` and amplitudes
//! `i^{l·y} (-1)^{q(y)}` over the coordinates `y`. The diagram has one Z spider
//! per `y_j` with phase `l_j·π/2`, Hadamard edges for the quadratic form, and
//! an X spider per output computing the parity that fixes that bit.

use zx_core::{Diagram, EdgeKind, ExactScalar, Phase, VertexKind};
use zx_oracle::Oracle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StabilizerError {
    #[error("vector length {0} is not a power of two")]
    Length(usize),
    #[error("zero vector")]
    Zero,
    #[error("support is not an affine subspace")]
    Support,
    #[error("amplitudes are not of stabilizer form")]
    Phases,
}

/// `v` as a multiple `i^k` of `base`.
fn quarter_turns(v: ExactScalar, base: ExactScalar) -> Option<u8> {
    let r = v.checked_div(&base)?;
    (0..4u8).find(|&k| r == ExactScalar::omega(2 * k as i64))
}

/// Diagram whose output statevector equals `v` exactly.
pub fn stabilizer_diagram(v: &[ExactScalar]) -> Result<Diagram, StabilizerError> {
    let len = v.len();
    if !len.is_power_of_two() {
        return Err(StabilizerError::Length(len));
    }
    let n = len.trailing_zeros() as usize;
    let support: Vec<usize> = (0..len).filter(|&x| !v[x].is_zero()).collect();
    let &x0 = support.first().ok_or(StabilizerError::Zero)?;
    // basis of the linear part by elimination on the shifted support
    let mut gens: Vec<usize> = Vec::new();
    for &x in &support {
        let mut y = x ^ x0;
        for &g in &gens {
            y = y.min(y ^ g);
        }
        if y != 0 {
            gens.push(y);
            gens.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let r = gens.len();
    if support.len() != 1 << r {
        return Err(StabilizerError::Support);
    }
    let point = |y: usize| (0..r).fold(x0, |acc, j| if (y >> j) & 1 == 1 { acc ^ gens[j] } else { acc });
    let base = v[x0];
    let turns = |y: usize| quarter_turns(v[point(y)], base).ok_or(StabilizerError::Phases);
    let l: Vec<u8> = (0..r).map(|j| turns(1 << j)).collect::<Result<_, _>>()?;
    let mut q = vec![vec![false; r]; r];
    for a in 0..r {
        for b in a + 1..r {
            let t = turns((1 << a) | (1 << b))?;
            let lin = (l[a] + l[b]) % 4;
            q[a][b] = match (t + 4 - lin) % 4 {
                0 => false,
                2 => true,
                _ => return Err(StabilizerError::Phases),
            };
        }
    }
    for y in 0..1usize << r {
        let mut t = 0u32;
        for j in 0..r {
            if (y >> j) & 1 == 1 {
                t += l[j] as u32;
                for b in j + 1..r {
                    if (y >> b) & 1 == 1 && q[j][b] {
                        t += 2;
                    }
                }
            }
        }
        if turns(y)? as u32 != t % 4 {
            return Err(StabilizerError::Phases);
        }
    }

    let mut d = Diagram::new();
    let outs: Vec<_> = (0..n).map(|k| d.add_output(k as i32)).collect();
    let ys: Vec<_> = (0..r).map(|j| d.add_vertex(VertexKind::Z(Phase::new(2 * l[j] as i64)))).collect();
    for a in 0..r {
        for b in a + 1..r {
            if q[a][b] {
                d.add_edge(ys[a], ys[b], EdgeKind::Hadamard).expect("live");
            }
        }
    }
    // output k is bit (n-1-k) of the index
    for (k, &o) in outs.iter().enumerate() {
        let bit = n - 1 - k;
        let p = if (x0 >> bit) & 1 == 1 { Phase::PI } else { Phase::ZERO };
        let x = d.add_vertex(VertexKind::X(p));
        d.add_edge(x, o, EdgeKind::Plain).expect("live");
        for j in 0..r {
            if (gens[j] >> bit) & 1 == 1 {
                d.add_edge(ys[j], x, EdgeKind::Plain).expect("live");
            }
        }
    }
    let got = Oracle::default().statevector(&d).expect("small diagram");
    let want = zx_oracle::DenseTensor::from_rows(n, 0, v.to_vec());
    let s = want.ratio_to(&zx_oracle::DenseTensor::from_rows(n, 0, got)).ok_or(StabilizerError::Phases)?;
    d.set_scalar(s);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[(i64, i64)]) -> Vec<ExactScalar> {
        xs.iter().map(|&(a, b)| ExactScalar::gaussian(a, b)).collect()
    }

    #[test]
    fn builds_exact_states() {
        let cases = [
            ints(&[(1, 0), (0, 0), (0, 0), (1, 0)]),
            ints(&[(1, 0), (1, 0), (1, 0), (-1, 0)]),
            ints(&[(0, 0), (0, 1), (0, 0), (0, 0)]),
            ints(&[(2, 0), (0, 2), (0, 2), (2, 0)]),
            ints(&[(1, 0), (0, 1), (0, 1), (-1, 0), (0, 1), (-1, 0), (-1, 0), (0, -1)]),
        ];
        for v in cases {
            let d = stabilizer_diagram(&v).unwrap();
            assert_eq!(zx_oracle::statevector(&d).unwrap(), v);
        }
    }

    #[test]
    fn rejects_non_stabilizer() {
        assert_eq!(stabilizer_diagram(&ints(&[(2, 0), (1, 0)])).unwrap_err(), StabilizerError::Phases);
        assert_eq!(stabilizer_diagram(&ints(&[(1, 0), (1, 0), (1, 0), (0, 0)])).unwrap_err(), StabilizerError::Support);
    }
}
