use std::collections::{HashSet, VecDeque};

use zx_core::ExactScalar;

use crate::DiscoveryError;

/// Largest qubit count [`enumerate_stabilizers`] accepts.
pub const MAX_QUBITS: usize = 3;

/// Normalised stabilizer states on `n` qubits, one per ray. Index `x` of a
/// state is the basis vector whose qubit 0 is the most significant bit.
#[derive(Clone, Debug)]
pub struct StabilizerLibrary {
    pub n: usize,
    pub states: Vec<Vec<ExactScalar>>,
    pub real_only: bool,
}

impl StabilizerLibrary {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Divides by the first non-zero amplitude, so every ray has one key.
fn ray_key(v: &[ExactScalar]) -> Vec<ExactScalar> {
    let first = *v.iter().find(|a| !a.is_zero()).expect("non-zero state");
    v.iter().map(|a| a.checked_div(&first).expect("non-zero")).collect()
}

fn h(v: &[ExactScalar], q: usize, n: usize) -> Vec<ExactScalar> {
    let bit = 1 << (n - 1 - q);
    let mut out = v.to_vec();
    for x in 0..v.len() {
        if x & bit == 0 {
            let (a, b) = (v[x], v[x | bit]);
            out[x] = (a + b) * ExactScalar::INV_SQRT2;
            out[x | bit] = (a - b) * ExactScalar::INV_SQRT2;
        }
    }
    out
}

fn s(v: &[ExactScalar], q: usize, n: usize) -> Vec<ExactScalar> {
    let bit = 1 << (n - 1 - q);
    v.iter().enumerate().map(|(x, &a)| if x & bit != 0 { a * ExactScalar::I } else { a }).collect()
}

fn cnot(v: &[ExactScalar], c: usize, t: usize, n: usize) -> Vec<ExactScalar> {
    let (cb, tb) = (1 << (n - 1 - c), 1 << (n - 1 - t));
    (0..v.len()).map(|x| if x & cb != 0 { v[x ^ tb] } else { v[x] }).collect()
}

/// Every stabilizer state on `n ≤ 3` qubits, as the orbit of `|0…0⟩` under
/// H, S and CNOT, up to global phase. With `real_only`, only states with a
/// real representative are kept.
pub fn enumerate_stabilizers(n: usize, real_only: bool) -> Result<StabilizerLibrary, DiscoveryError> {
    if n == 0 || n > MAX_QUBITS {
        return Err(DiscoveryError::TooManyQubits { n, max: MAX_QUBITS });
    }
    let mut zero = vec![ExactScalar::ZERO; 1 << n];
    zero[0] = ExactScalar::ONE;
    let mut seen = HashSet::new();
    let mut states = Vec::new();
    let mut queue = VecDeque::from([zero]);
    seen.insert(ray_key(&queue[0]));
    while let Some(v) = queue.pop_front() {
        let mut next = Vec::new();
        for q in 0..n {
            next.push(h(&v, q, n));
            next.push(s(&v, q, n));
            for t in 0..n {
                if t != q {
                    next.push(cnot(&v, q, t, n));
                }
            }
        }
        for w in next {
            if seen.insert(ray_key(&w)) {
                queue.push_back(w);
            }
        }
        states.push(v);
    }
    if real_only {
        states.retain(|v| ray_key(v).iter().all(|a| *a == a.conj()));
        // a real representative
        for v in &mut states {
            let support = v.iter().filter(|a| !a.is_zero()).count();
            let key = ray_key(v);
            *v = key.into_iter().map(|a| a.mul_sqrt2_pow(-(support.trailing_zeros() as i32))).collect();
        }
    }
    Ok(StabilizerLibrary { n, states, real_only })
}
