use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Circuit, CircuitError, Gate};

/// Knobs of the random generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MctDenseConfig {
    /// Smallest control-set size.
    pub min_controls: usize,
    /// Largest control-set size; `None` means every non-target wire.
    pub max_controls: Option<usize>,
}

impl Default for MctDenseConfig {
    fn default() -> Self {
        MctDenseConfig { min_controls: 2, max_controls: None }
    }
}

/// Random MCT-dense circuit with the default control-size range
/// `[2, qubits − 1]`.
pub fn random_mct_dense(
    qubits: usize,
    n_not: usize,
    n_cnot: usize,
    n_mct: usize,
    seed: u64,
) -> Result<Circuit, CircuitError> {
    random_mct_dense_with(qubits, n_not, n_cnot, n_mct, seed, MctDenseConfig::default())
}

/// Exactly `n_not` X, `n_cnot` CNOT and `n_mct` MCT gates in uniformly
/// shuffled order. MCT targets come from the bottom `⌈qubits/4⌉` wires and
/// the controls are a random subset of the other wires whose size is uniform
/// in the configured range.
pub fn random_mct_dense_with(
    qubits: usize,
    n_not: usize,
    n_cnot: usize,
    n_mct: usize,
    seed: u64,
    cfg: MctDenseConfig,
) -> Result<Circuit, CircuitError> {
    if qubits < 3 {
        return Err(CircuitError::TooFewQubits { needed: 3, got: qubits });
    }
    let hi = cfg.max_controls.unwrap_or(qubits - 1).min(qubits - 1);
    if cfg.min_controls < 1 || cfg.min_controls > hi {
        return Err(CircuitError::Config(format!("control range {}..={hi} is empty", cfg.min_controls)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bottom = qubits.div_ceil(4).max(1);
    let all: Vec<usize> = (0..qubits).collect();
    let mut gates = Vec::with_capacity(n_not + n_cnot + n_mct);
    for _ in 0..n_not {
        gates.push(Gate::X { target: rng.random_range(0..qubits) });
    }
    for _ in 0..n_cnot {
        let pair: Vec<usize> = all.choose_multiple(&mut rng, 2).copied().collect();
        gates.push(Gate::Cnot { control: pair[0], target: pair[1] });
    }
    for _ in 0..n_mct {
        let target = qubits - bottom + rng.random_range(0..bottom);
        let k = rng.random_range(cfg.min_controls..=hi);
        let others: Vec<usize> = all.iter().copied().filter(|&q| q != target).collect();
        let mut controls: Vec<usize> = others.choose_multiple(&mut rng, k).copied().collect();
        controls.sort_unstable();
        gates.push(Gate::Mct { controls, target });
    }
    gates.shuffle(&mut rng);
    Ok(Circuit { qubits, gates, diffusion: None })
}
