use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use zx_catalog::{rule_to_text, Catalog};
use zx_circuits::{load_fixture, random_mct_dense, CircuitError};
use zx_cli::{
    aggregate, append_csv, bench_run, histogram, peaks_json, read_input, statevector_csv, terms_report, BenchConfig,
    CliError, Emit,
};
use zx_discovery::{anneal_chains, certificate, enumerate_stabilizers, target_by_name, AnnealSchedule, DiscoveryError};
use zx_strategy::{run_pipeline, DiffusionMode, Strategy};

#[derive(Parser)]
#[command(name = "starzx", version, about = "Exact simulation of Toffoli-heavy circuits by star-edge decompositions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simulate a circuit file or bundled fixture and write its statevector and peaks.
    Run {
        #[arg(long)]
        circuit: String,
        #[arg(long, default_value = "weighted")]
        strategy: Strategy,
        #[arg(long, default_value = "auto")]
        diffusion: DiffusionMode,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Comma-separated subset of statevector,peaks,terms.
        #[arg(long, default_value = "statevector,peaks,terms")]
        emit: Emit,
        /// Rows of the stdout histogram.
        #[arg(long, default_value_t = 16)]
        top: usize,
    },
    /// Check every rule of the catalog exactly.
    VerifyCatalog {
        /// Directory of .zxr files; the built-in catalog if absent.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Write a seeded random MCT-dense circuit as JSON.
    Gen {
        #[arg(long)]
        qubits: usize,
        #[arg(long, default_value_t = 0)]
        nots: usize,
        #[arg(long, default_value_t = 0)]
        cnots: usize,
        #[arg(long)]
        mcts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare strategies over a grid of random circuits.
    Bench {
        /// JSON bench configuration; the built-in grid if absent.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Search for a stabilizer decomposition of a small star state.
    Discover {
        /// star_edge or star_state_<legs>_<0|p|m|pi>.
        #[arg(long)]
        target: String,
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON annealing schedule.
        #[arg(long)]
        schedule: Option<PathBuf>,
        /// Independent chains with consecutive seeds.
        #[arg(long, default_value_t = 1)]
        chains: usize,
        /// Certificate file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, default)]
struct ScheduleFile {
    initial_temperature: f64,
    cooling_factor: f64,
    steps: usize,
    moves_per_step: usize,
}

impl Default for ScheduleFile {
    fn default() -> Self {
        let s = AnnealSchedule::default();
        ScheduleFile {
            initial_temperature: s.initial_temperature,
            cooling_factor: s.cooling_factor,
            steps: s.steps,
            moves_per_step: s.moves_per_step,
        }
    }
}

fn circuit_error(e: CircuitError) -> CliError {
    CliError::Input(e.to_string())
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn create_dir(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

fn run(
    circuit: &str,
    strategy: Strategy,
    diffusion: DiffusionMode,
    out: &Path,
    emit: Emit,
    top: usize,
) -> Result<(), CliError> {
    let fx = load_fixture(circuit).map_err(circuit_error)?;
    let c = fx.circuit;
    let r = run_pipeline(&c, strategy, diffusion).map_err(|e| CliError::Failure(e.to_string()))?;
    create_dir(out)?;
    if emit.statevector {
        write(&out.join("statevector.csv"), &statevector_csv(&r, c.qubits))?;
    }
    if emit.peaks {
        write(&out.join("peaks.json"), &peaks_json(&r, c.qubits))?;
    }
    if emit.terms {
        write(&out.join("terms.txt"), &terms_report(&r, strategy, diffusion))?;
    }
    print!("{}", histogram(&r, c.qubits, top, 40));
    println!("{}: {} terminal terms, {} peaks above {:.6}", fx.name, r.terminal_terms, r.peaks.len(), r.threshold);
    Ok(())
}

fn verify_catalog(dir: Option<&Path>) -> Result<(), CliError> {
    let cat = match dir {
        Some(d) => Catalog::load_dir(d).map_err(|e| CliError::Input(e.to_string()))?,
        None => Catalog::shipped(),
    };
    let report = cat.verify_all();
    println!("{:<20} {:>3} {:>3} {:>8}  result", "rule", "p", "r", "beta");
    for e in &report {
        let status = if e.passed { "ok" } else { "FAILED" };
        println!("{:<20} {:>3} {:>3} {:>8.4}  {status}", e.id, e.terms_p, e.reduction_r, e.scaling);
    }
    let failed = report.iter().filter(|e| !e.passed).count();
    println!("{} rules, {failed} failed", report.len());
    if failed > 0 {
        return Err(CliError::Failure(format!("{failed} rules failed verification")));
    }
    Ok(())
}

fn gen(qubits: usize, nots: usize, cnots: usize, mcts: usize, seed: u64, out: Option<&Path>) -> Result<(), CliError> {
    let c = random_mct_dense(qubits, nots, cnots, mcts, seed).map_err(circuit_error)?;
    let text = c.to_json() + "\n";
    match out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bench(config: Option<&Path>, jobs: usize, out: &Path) -> Result<(), CliError> {
    let cfg: BenchConfig = match config {
        Some(p) => {
            serde_json::from_str(&read_input(p)?).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?
        }
        None => BenchConfig::default(),
    };
    let rows = bench_run(&cfg, jobs)?;
    create_dir(out)?;
    append_csv(&out.join("bench.csv"), &rows)?;
    let agg = aggregate(&rows);
    write(&out.join("aggregate.json"), &(serde_json::to_string_pretty(&agg).expect("serializable") + "\n"))?;
    for c in &agg.cells {
        let ratio = c.mean_ratio.map_or("-".to_string(), |x| format!("{x:.3}"));
        let share = c.improvement_share.map_or("-".to_string(), |x| format!("{x:.2}"));
        println!(
            "q{:<3} not{:<3} cx{:<3} mct{:<3} finished {:>3}/{:<3} ratio {ratio:>6} improved {share:>5} {}",
            c.cell.qubits, c.cell.nots, c.cell.cnots, c.cell.mcts, c.finished, cfg.seeds, c.marker
        );
    }
    Ok(())
}

fn discover(
    target: &str,
    terms: usize,
    seed: u64,
    schedule: Option<&Path>,
    chains: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let input = |e: DiscoveryError| CliError::Input(e.to_string());
    let failure = |e: DiscoveryError| CliError::Failure(e.to_string());
    let sf: ScheduleFile = match schedule {
        Some(p) => {
            serde_json::from_str(&read_input(p)?).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?
        }
        None => ScheduleFile::default(),
    };
    let sched = AnnealSchedule {
        initial_temperature: sf.initial_temperature,
        cooling_factor: sf.cooling_factor,
        steps: sf.steps,
        moves_per_step: sf.moves_per_step,
        seed,
    };
    let t = target_by_name(target).map_err(input)?;
    let lib = enumerate_stabilizers(t.qubits(), t.is_real().map_err(failure)?).map_err(input)?;
    let sv = t.statevector().map_err(failure)?;
    let runs = anneal_chains(&sv, terms, &sched, &lib, chains.max(1)).map_err(input)?;
    let Some((i, found)) = runs.iter().enumerate().find_map(|(i, r)| r.found.as_ref().map(|f| (i, f))) else {
        println!("none");
        return Ok(());
    };
    let rule = certificate(&t, &lib, found).map_err(failure)?;
    let text = rule_to_text(&rule);
    match out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    eprintln!("found {} with seed {} after {} proposals", rule.id, seed.wrapping_add(i as u64), runs[i].proposals);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Run { circuit, strategy, diffusion, out, emit, top } => {
            run(&circuit, strategy, diffusion, &out, emit, top)
        }
        Cmd::VerifyCatalog { dir } => verify_catalog(dir.as_deref()),
        Cmd::Gen { qubits, nots, cnots, mcts, seed, out } => gen(qubits, nots, cnots, mcts, seed, out.as_deref()),
        Cmd::Bench { config, jobs, out } => bench(config.as_deref(), jobs, &out),
        Cmd::Discover { target, terms, seed, schedule, chains, out } => {
            discover(&target, terms, seed, schedule.as_deref(), chains, out.as_deref())
        }
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("starzx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
