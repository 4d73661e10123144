use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use zx_circuits::{random_mct_dense, to_diagram, with_zero_inputs, Circuit};
use zx_core::{Diagram, ExactScalar, Phase, VertexKind};
use zx_strategy::{decompose_until, Strategy, StrategyError};

use crate::CliError;

/// How a random circuit is turned into the diagram whose terms are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Closure {
    /// |+⟩ on the wires outside the MCT target block, |0⟩ on the block,
    /// outputs left open.
    SuperposedControls,
    /// |0…0⟩ inputs and ⟨0…0| effects: a scalar.
    ZeroScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BenchConfig {
    pub qubits: Vec<usize>,
    pub nots: Vec<usize>,
    pub cnots: Vec<usize>,
    pub mcts: Vec<usize>,
    pub seeds: u64,
    pub seed_base: u64,
    pub timeout_s: f64,
    pub strategies: Vec<String>,
    pub closure: Closure,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            qubits: vec![8, 12],
            nots: vec![0, 24],
            cnots: vec![0, 24],
            mcts: vec![3, 6],
            seeds: 50,
            seed_base: 0,
            timeout_s: 180.0,
            strategies: vec!["weighted".into(), "greedy".into()],
            closure: Closure::SuperposedControls,
        }
    }
}

impl BenchConfig {
    /// The small grid: 10 seeds and a 60 s timeout.
    pub fn reduced() -> Self {
        BenchConfig { seeds: 10, timeout_s: 60.0, ..Self::default() }
    }

    pub fn strategies(&self) -> Result<Vec<Strategy>, CliError> {
        if self.strategies.is_empty() {
            return Err(CliError::Input("no strategies configured".into()));
        }
        self.strategies.iter().map(|s| s.parse().map_err(|e: String| CliError::Input(e))).collect()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for &qubits in &self.qubits {
            for &nots in &self.nots {
                for &cnots in &self.cnots {
                    for &mcts in &self.mcts {
                        out.push(Cell { qubits, nots, cnots, mcts });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub qubits: usize,
    pub nots: usize,
    pub cnots: usize,
    pub mcts: usize,
}

/// One attempt of one strategy on one seeded circuit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub qubits: usize,
    pub nots: usize,
    pub cnots: usize,
    pub mcts: usize,
    pub seed: u64,
    pub strategy: String,
    pub terminal_terms: Option<u64>,
    pub timed_out: bool,
    pub wall_ms: u64,
}

impl BenchRow {
    pub fn cell(&self) -> Cell {
        Cell { qubits: self.qubits, nots: self.nots, cnots: self.cnots, mcts: self.mcts }
    }

    /// Everything but the wall time.
    pub fn key(&self) -> (Cell, u64, String, Option<u64>, bool) {
        (self.cell(), self.seed, self.strategy.clone(), self.terminal_terms, self.timed_out)
    }
}

pub fn bench_diagram(c: &Circuit, closure: Closure) -> Diagram {
    match closure {
        Closure::SuperposedControls => {
            let top = c.qubits - c.qubits.div_ceil(4);
            let mut full = Circuit::new(c.qubits);
            for q in 0..top {
                full.h(q);
            }
            full.gates.extend(c.gates.iter().cloned());
            with_zero_inputs(&to_diagram(&full).expect("generated circuit is valid"))
        }
        Closure::ZeroScalar => {
            let mut d = with_zero_inputs(&to_diagram(c).expect("generated circuit is valid"));
            for o in d.outputs().to_vec() {
                d.set_kind(o, VertexKind::X(Phase::ZERO)).expect("live");
            }
            d.set_outputs(Vec::new());
            d.mul_scalar(ExactScalar::sqrt2_pow(-(c.qubits as i32)));
            d
        }
    }
}

fn attempt(cell: Cell, seed: u64, strategy: Strategy, cfg: &BenchConfig) -> Result<BenchRow, CliError> {
    let c = random_mct_dense(cell.qubits, cell.nots, cell.cnots, cell.mcts, seed)
        .map_err(|e| CliError::Input(format!("cell {cell:?}: {e}")))?;
    let d = bench_diagram(&c, cfg.closure);
    let start = Instant::now();
    let deadline = start + Duration::from_secs_f64(cfg.timeout_s);
    let (terminal_terms, timed_out) = match decompose_until(&d, strategy, Some(deadline)) {
        Ok((terms, _)) => (Some(terms.len() as u64), false),
        Err(StrategyError::Timeout) => (None, true),
        Err(e) => return Err(CliError::Failure(format!("cell {cell:?} seed {seed}: {e}"))),
    };
    Ok(BenchRow {
        qubits: cell.qubits,
        nots: cell.nots,
        cnots: cell.cnots,
        mcts: cell.mcts,
        seed,
        strategy: strategy.to_string(),
        terminal_terms,
        timed_out,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every (cell, seed, strategy) attempt on a pool of `jobs` workers.
/// Rows come back sorted by cell, seed and strategy.
pub fn bench_run(cfg: &BenchConfig, jobs: usize) -> Result<Vec<BenchRow>, CliError> {
    if cfg.timeout_s.is_nan() || cfg.timeout_s <= 0.0 {
        return Err(CliError::Input("timeout_s must be positive".into()));
    }
    let strategies = cfg.strategies()?;
    let mut work = Vec::new();
    for cell in cfg.cells() {
        for i in 0..cfg.seeds {
            for &s in &strategies {
                work.push((cell, cfg.seed_base + i, s));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Failure(e.to_string()))?;
    let rows: Result<Vec<BenchRow>, CliError> =
        pool.install(|| work.par_iter().map(|&(cell, seed, s)| attempt(cell, seed, s, cfg)).collect());
    let mut rows = rows?;
    rows.sort_by_cached_key(BenchRow::key);
    Ok(rows)
}

/// Appends rows to `path`, writing the header only when the file is new or
/// empty.
pub fn append_csv(path: &Path, rows: &[BenchRow]) -> Result<(), CliError> {
    let fresh = std::fs::metadata(path).map_or(true, |m| m.len() == 0);
    let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| CliError::io(path, e))?;
    let mut w = csv::WriterBuilder::new().has_headers(fresh).from_writer(file);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Failure(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRow>, CliError> {
    let mut r = csv::Reader::from_path(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    r.deserialize().collect::<Result<_, _>>().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Marker classes by the number of seeds on which both strategies finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relevance {
    High,
    Medium,
    Low,
    None,
}

impl Relevance {
    pub fn of(finished: usize) -> Self {
        match finished {
            40.. => Relevance::High,
            20..=39 => Relevance::Medium,
            1..=19 => Relevance::Low,
            0 => Relevance::None,
        }
    }

    pub fn marker(self) -> &'static str {
        match self {
            Relevance::High => "cube",
            Relevance::Medium => "big_circle",
            Relevance::Low => "small_circle",
            Relevance::None => "cross",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    #[serde(flatten)]
    pub cell: Cell,
    pub attempts: usize,
    pub timeouts: usize,
    /// Seeds on which both strategies finished.
    pub finished: usize,
    /// Mean of greedy terms / weighted terms.
    pub mean_ratio: Option<f64>,
    /// Share of finished seeds where weighted needed fewer terms.
    pub improvement_share: Option<f64>,
    pub relevance: Relevance,
    pub marker: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub baseline: String,
    pub cells: Vec<CellReport>,
}

pub fn aggregate(rows: &[BenchRow]) -> Aggregate {
    // cell → seed → (weighted terms, baseline terms)
    type Pairs = BTreeMap<u64, (Option<u64>, Option<u64>)>;
    let mut by_cell: BTreeMap<Cell, Pairs> = BTreeMap::new();
    let mut attempts: BTreeMap<Cell, (usize, usize)> = BTreeMap::new();
    for r in rows {
        let a = attempts.entry(r.cell()).or_default();
        a.0 += 1;
        a.1 += r.timed_out as usize;
        let slot = by_cell.entry(r.cell()).or_default().entry(r.seed).or_default();
        match r.strategy.as_str() {
            "weighted" => slot.0 = r.terminal_terms,
            _ => slot.1 = r.terminal_terms,
        }
    }
    let cells = by_cell
        .into_iter()
        .map(|(cell, seeds)| {
            let pairs: Vec<(u64, u64)> = seeds
                .values()
                .filter_map(|&(w, g)| match (w, g) {
                    (Some(w), Some(g)) if w > 0 => Some((w, g)),
                    _ => None,
                })
                .collect();
            let n = pairs.len();
            let mean_ratio = (n > 0).then(|| pairs.iter().map(|&(w, g)| g as f64 / w as f64).sum::<f64>() / n as f64);
            let improvement_share = (n > 0).then(|| pairs.iter().filter(|&&(w, g)| w < g).count() as f64 / n as f64);
            let relevance = Relevance::of(n);
            let (attempts, timeouts) = attempts[&cell];
            CellReport {
                cell,
                attempts,
                timeouts,
                finished: n,
                mean_ratio,
                improvement_share,
                relevance,
                marker: relevance.marker().to_string(),
            }
        })
        .collect();
    Aggregate { baseline: "greedy smallest-scaling baseline, standing in for an external simulator".to_string(), cells }
}
