use std::time::{Duration, Instant};

use zx_circuits::{split_stages, with_zero_inputs, Circuit};
use zx_core::{ExactScalar, Term};
use zx_oracle::Oracle;
use zx_rewrite::partial_simplify;

use crate::expand::{expand, preprocess, ExpansionStats, Strategy};
use crate::StrategyError;

/// Whether to run the diffusion stage of a circuit that has one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiffusionMode {
    Auto,
    None,
}

impl std::str::FromStr for DiffusionMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(DiffusionMode::Auto),
            "none" => Ok(DiffusionMode::None),
            _ => Err(format!("unknown diffusion mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Timings {
    pub preprocess: Duration,
    pub stage1: Duration,
    pub stage2: Duration,
    pub contraction: Duration,
    /// Part of the two stages spent choosing actions, summed over workers.
    pub weighting: Duration,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    /// Terms whose statevectors were summed.
    pub terminal_terms: usize,
    /// Terms left after the main part, before the diffusion stage.
    pub stage1_terms: usize,
    pub statevector: Vec<ExactScalar>,
    pub probabilities: Vec<f64>,
    pub peaks: Vec<usize>,
    pub threshold: f64,
    pub stats: ExpansionStats,
    pub timings: Timings,
}

/// Threshold `(max + min) / 2` and the indices strictly above it.
pub fn count_peaks(probabilities: &[f64]) -> Result<(f64, Vec<usize>), StrategyError> {
    if probabilities.is_empty() {
        return Err(StrategyError::EmptyProbabilities);
    }
    let max = probabilities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = probabilities.iter().copied().fold(f64::INFINITY, f64::min);
    let threshold = (max + min) / 2.0;
    let peaks = probabilities.iter().enumerate().filter(|(_, &p)| p > threshold).map(|(i, _)| i).collect();
    Ok((threshold, peaks))
}

fn map_sum(terms: &[Term], oracle: &Oracle) -> Result<Vec<ExactScalar>, StrategyError> {
    let one = |t: &Term| -> Result<Vec<ExactScalar>, StrategyError> {
        let v = oracle.statevector(&t.diagram)?;
        Ok(v.into_iter().map(|a| a * t.coeff).collect())
    };
    let add = |a: Vec<ExactScalar>, b: Vec<ExactScalar>| -> Vec<ExactScalar> {
        if a.is_empty() {
            return b;
        }
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        // exact addition is associative, so the reduction order is irrelevant
        terms.par_iter().map(one).try_reduce(Vec::new, |a, b| Ok(add(a, b)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        terms.iter().try_fold(Vec::new(), |acc, t| Ok(add(acc, one(t)?)))
    }
}

/// Simulates `c` on |0…0⟩: decomposes the main part, then (with
/// [`DiffusionMode::Auto`]) composes every term with the diffusion stage and
/// decomposes again, and sums the terms' statevectors exactly.
pub fn run_pipeline(c: &Circuit, strategy: Strategy, diffusion: DiffusionMode) -> Result<RunResult, StrategyError> {
    run_pipeline_with(c, strategy, diffusion, &Oracle::default())
}

pub fn run_pipeline_with(
    c: &Circuit,
    strategy: Strategy,
    diffusion: DiffusionMode,
    oracle: &Oracle,
) -> Result<RunResult, StrategyError> {
    if c.qubits > oracle.wire_limit {
        return Err(StrategyError::TooWide { qubits: c.qubits, limit: oracle.wire_limit });
    }
    let mut timings = Timings::default();
    let (main, diff) = split_stages(c)?;
    let clock = Instant::now();
    let root = preprocess(&with_zero_inputs(&main));
    timings.preprocess = clock.elapsed();

    let clock = Instant::now();
    let (mut terms, mut stats) = expand(vec![Term::unit(root)], strategy)?;
    timings.stage1 = clock.elapsed();
    let stage1_terms = terms.len();

    if let (Some(diff), DiffusionMode::Auto) = (diff, diffusion) {
        let clock = Instant::now();
        let composed: Vec<Term> = terms
            .into_iter()
            .map(|t| {
                let d = t.diagram.compose(&diff).expect("matching arity");
                Term::new(t.coeff, partial_simplify(&d))
            })
            .collect();
        let (t2, s2) = expand(composed, strategy)?;
        stats.merge(&s2);
        terms = t2;
        timings.stage2 = clock.elapsed();
    }
    timings.weighting = stats.weighting;

    let clock = Instant::now();
    let statevector = if terms.is_empty() { vec![ExactScalar::ZERO; 1 << c.qubits] } else { map_sum(&terms, oracle)? };
    timings.contraction = clock.elapsed();

    let norms: Vec<ExactScalar> = statevector.iter().map(ExactScalar::norm_sqr).collect();
    let total = norms.iter().fold(ExactScalar::ZERO, |a, &b| a + b).to_f64().0;
    let probabilities: Vec<f64> = norms.iter().map(|n| if total > 0.0 { n.to_f64().0 / total } else { 0.0 }).collect();
    let (threshold, peaks) = count_peaks(&probabilities)?;
    Ok(RunResult {
        terminal_terms: terms.len(),
        stage1_terms,
        statevector,
        probabilities,
        peaks,
        threshold,
        stats,
        timings,
    })
}
