use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zx_core::ExactScalar;

use crate::library::StabilizerLibrary;
use crate::solve::{fit, solve_coefficients, to_c64, RESIDUAL_TOL};
use crate::DiscoveryError;

/// Geometric cooling: `moves_per_step` swap proposals at each temperature,
/// then `T ← T·cooling_factor`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnealSchedule {
    pub initial_temperature: f64,
    pub cooling_factor: f64,
    pub steps: usize,
    pub moves_per_step: usize,
    pub seed: u64,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule { initial_temperature: 0.05, cooling_factor: 0.995, steps: 2000, moves_per_step: 100, seed: 0 }
    }
}

impl AnnealSchedule {
    pub fn with_seed(self, seed: u64) -> Self {
        AnnealSchedule { seed, ..self }
    }

    fn validate(&self) -> Result<(), DiscoveryError> {
        let ok = self.initial_temperature > 0.0 && self.cooling_factor > 0.0 && self.cooling_factor < 1.0;
        if ok {
            Ok(())
        } else {
            Err(DiscoveryError::Schedule(format!("{self:?}")))
        }
    }
}

/// Library indices and exact coefficients with `Σ cᵢ·states[iᵢ] = target`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub indices: Vec<usize>,
    pub coefficients: Vec<ExactScalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnnealRun {
    pub found: Option<Decomposition>,
    pub proposals: usize,
    pub accepted: usize,
    /// FNV-1a hash of the accept/reject sequence.
    pub trace_digest: u64,
}

struct Energy<'a> {
    cols: &'a [DVector<Complex<f64>>],
    target: DVector<Complex<f64>>,
}

impl Energy<'_> {
    fn of(&self, subset: &[usize]) -> f64 {
        let m: Vec<DVector<Complex<f64>>> = subset.iter().map(|&i| self.cols[i].clone()).collect();
        fit(&DMatrix::from_columns(&m), &self.target).map_or(f64::INFINITY, |r| r.1)
    }
}

/// Random walk over `k`-subsets of the library. A move swaps one member for
/// a non-member; the energy is the relative least-squares residual and a
/// worse subset is accepted with probability `exp(−Δ/T)`. Stops at the first
/// subset whose fit is exact after snapping, or returns `found: None` once the
/// schedule is spent. Deterministic for a given schedule.
pub fn anneal(
    target: &[ExactScalar],
    k: usize,
    schedule: &AnnealSchedule,
    library: &StabilizerLibrary,
) -> Result<AnnealRun, DiscoveryError> {
    schedule.validate()?;
    if target.len() != 1 << library.n {
        return Err(DiscoveryError::Dimension { target: target.len(), library: 1 << library.n });
    }
    if k == 0 || k > library.len() {
        return Err(DiscoveryError::Terms { k, available: library.len() });
    }
    let cols: Vec<DVector<Complex<f64>>> = library.states.iter().map(|s| to_c64(s)).collect();
    let energy = Energy { cols: &cols, target: to_c64(target) };
    let mut rng = ChaCha8Rng::seed_from_u64(schedule.seed);
    let mut member = vec![false; library.len()];
    let mut subset = Vec::with_capacity(k);
    while subset.len() < k {
        let i = rng.random_range(0..library.len());
        if !std::mem::replace(&mut member[i], true) {
            subset.push(i);
        }
    }
    let mut run = AnnealRun { found: None, proposals: 0, accepted: 0, trace_digest: 0xcbf2_9ce4_8422_2325 };
    let certify = |s: &[usize]| {
        let mut idx = s.to_vec();
        idx.sort_unstable();
        let states: Vec<&[ExactScalar]> = idx.iter().map(|&i| library.states[i].as_slice()).collect();
        solve_coefficients(&states, target).map(|coefficients| Decomposition { indices: idx, coefficients })
    };
    let mut e = energy.of(&subset);
    if e < RESIDUAL_TOL {
        if let Some(d) = certify(&subset) {
            run.found = Some(d);
            return Ok(run);
        }
    }
    let mut t = schedule.initial_temperature;
    for _ in 0..schedule.steps {
        for _ in 0..schedule.moves_per_step {
            if k == library.len() {
                return Ok(run);
            }
            let slot = rng.random_range(0..k);
            let incoming = loop {
                let i = rng.random_range(0..library.len());
                if !member[i] {
                    break i;
                }
            };
            let outgoing = std::mem::replace(&mut subset[slot], incoming);
            let e2 = energy.of(&subset);
            let accept = e2 <= e || rng.random::<f64>() < (-(e2 - e) / t).exp();
            run.proposals += 1;
            run.trace_digest = (run.trace_digest ^ accept as u64).wrapping_mul(0x100_0000_01b3);
            if accept {
                run.accepted += 1;
                member[outgoing] = false;
                member[incoming] = true;
                e = e2;
                if e < RESIDUAL_TOL {
                    if let Some(d) = certify(&subset) {
                        run.found = Some(d);
                        return Ok(run);
                    }
                }
            } else {
                subset[slot] = outgoing;
            }
        }
        t *= schedule.cooling_factor;
    }
    Ok(run)
}

/// Independent chains with seeds `schedule.seed + i`, in parallel with the
/// `parallel` feature. Results are in seed order.
pub fn anneal_chains(
    target: &[ExactScalar],
    k: usize,
    schedule: &AnnealSchedule,
    library: &StabilizerLibrary,
    chains: usize,
) -> Result<Vec<AnnealRun>, DiscoveryError> {
    let one = |i: usize| anneal(target, k, &schedule.with_seed(schedule.seed.wrapping_add(i as u64)), library);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..chains).into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..chains).map(one).collect()
    }
}
