use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use zx_strategy::{DiffusionMode, RunResult, Strategy};

/// Files `run` can write.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Emit {
    pub statevector: bool,
    pub peaks: bool,
    pub terms: bool,
}

impl Default for Emit {
    fn default() -> Self {
        Emit { statevector: true, peaks: true, terms: true }
    }
}

impl FromStr for Emit {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut e = Emit { statevector: false, peaks: false, terms: false };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "statevector" => e.statevector = true,
                "peaks" => e.peaks = true,
                "terms" => e.terms = true,
                _ => return Err(format!("unknown output {part:?}")),
            }
        }
        Ok(e)
    }
}

/// Basis index as a bit string, qubit 0 first.
pub fn bitstring(index: usize, qubits: usize) -> String {
    (0..qubits).map(|q| if index >> (qubits - 1 - q) & 1 == 1 { '1' } else { '0' }).collect()
}

/// 12 significant digits, in positional notation unless tiny.
pub fn fmt_f64(x: f64) -> String {
    let v: f64 = format!("{x:.11e}").parse().expect("formatted float");
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() < 1e-6 {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn statevector_csv(r: &RunResult, qubits: usize) -> String {
    let mut s = String::from("index,bitstring,re,im,prob\n");
    for (i, (a, p)) in r.statevector.iter().zip(&r.probabilities).enumerate() {
        let (re, im) = a.to_f64();
        let _ = writeln!(s, "{i},{},{},{},{}", bitstring(i, qubits), fmt_f64(re), fmt_f64(im), fmt_f64(*p));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeakEntry {
    pub bitstring: String,
    pub prob: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeaksFile {
    pub threshold: f64,
    pub peaks: Vec<PeakEntry>,
}

fn round12(x: f64) -> f64 {
    fmt_f64(x).parse().expect("formatted float")
}

pub fn peaks_json(r: &RunResult, qubits: usize) -> String {
    let f = PeaksFile {
        threshold: round12(r.threshold),
        peaks: r
            .peaks
            .iter()
            .map(|&i| PeakEntry { bitstring: bitstring(i, qubits), prob: round12(r.probabilities[i]) })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("serializable") + "\n"
}

pub fn terms_report(r: &RunResult, strategy: Strategy, diffusion: DiffusionMode) -> String {
    let t = &r.timings;
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
    let mut s = String::new();
    let _ = writeln!(s, "strategy {strategy}");
    let _ = writeln!(s, "diffusion {}", if diffusion == DiffusionMode::Auto { "auto" } else { "none" });
    let _ = writeln!(s, "stage1_terms {}", r.stage1_terms);
    let _ = writeln!(s, "terminal_terms {}", r.terminal_terms);
    let _ = writeln!(s, "peaks {}", r.peaks.len());
    let _ = writeln!(s, "actions {}", r.stats.actions);
    let _ = writeln!(s, "raw_branches {}", r.stats.raw_branches);
    let _ = writeln!(s, "pruned {}", r.stats.pruned);
    let _ = writeln!(s, "max_depth {}", r.stats.max_depth);
    let _ = writeln!(s, "preprocess_ms {:.3}", ms(t.preprocess));
    let _ = writeln!(s, "stage1_ms {:.3}", ms(t.stage1));
    let _ = writeln!(s, "stage2_ms {:.3}", ms(t.stage2));
    let _ = writeln!(s, "contraction_ms {:.3}", ms(t.contraction));
    let _ = writeln!(s, "weighting_ms {:.3}", ms(t.weighting));
    s
}

/// The `rows` most probable basis states as bars scaled to `width`.
pub fn histogram(r: &RunResult, qubits: usize, rows: usize, width: usize) -> String {
    let mut order: Vec<usize> = (0..r.probabilities.len()).collect();
    order.sort_by(|&a, &b| r.probabilities[b].total_cmp(&r.probabilities[a]).then(a.cmp(&b)));
    let top = r.probabilities.get(*order.first().unwrap_or(&0)).copied().unwrap_or(0.0);
    let mut s = String::new();
    for &i in order.iter().take(rows) {
        let p = r.probabilities[i];
        let n = if top > 0.0 { (p / top * width as f64).round() as usize } else { 0 };
        let mark = if r.peaks.binary_search(&i).is_ok() { '*' } else { ' ' };
        let _ = writeln!(s, "{} {mark} {:.6} {}", bitstring(i, qubits), p, "#".repeat(n));
    }
    if order.len() > rows {
        let _ = writeln!(s, "... {} more", order.len() - rows);
    }
    s
}
