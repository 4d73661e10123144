//! Line-based diagram serialization.
//!
//! ```text
//! zxd 1
//! V 0 B 0
//! V 1 Z 2
//! V 2 B 0
//! E 0 1 P
//! E 1 2 S
//! IN 0
//! OUT 2
//! SCALAR 1 0 0 0 0
//! ```
//!
//! `V id kind phase_eighths [qubit row]` with kind `B`, `Z` or `X`;
//! `E id1 id2 kind` with kind `P`, `H` or `S`. Ids in a file are labels only;
//! parsing allocates fresh ids in order of appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::{Diagram, EdgeKind, ExactScalar, Phase, VId, VertexKind};

pub const HEADER: &str = "zxd 1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct TextError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> TextError {
    TextError { line, msg: msg.into() }
}

pub fn edge_code(k: EdgeKind) -> char {
    match k {
        EdgeKind::Plain => 'P',
        EdgeKind::Hadamard => 'H',
        EdgeKind::Star => 'S',
    }
}

/// Writes the body (no header) of a diagram.
pub fn write_body(d: &Diagram, out: &mut String) {
    for v in d.vertex_ids() {
        let (c, p) = match d.kind(v) {
            VertexKind::Boundary => ('B', 0),
            VertexKind::Z(p) => ('Z', p.eighths()),
            VertexKind::X(p) => ('X', p.eighths()),
        };
        let _ = write!(out, "V {v} {c} {p}");
        if d.qubit(v) >= 0 || d.row(v) >= 0 {
            let _ = write!(out, " {} {}", d.qubit(v), d.row(v));
        }
        out.push('\n');
    }
    for e in d.edge_ids() {
        let ed = d.edge(e);
        let _ = writeln!(out, "E {} {} {}", ed.a, ed.b, edge_code(ed.kind));
    }
    let list = |ids: &[VId]| ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "IN {}", list(d.inputs()).trim_end());
    let _ = writeln!(out, "OUT {}", list(d.outputs()).trim_end());
    let (a, b, c, dd, k) = d.scalar().parts();
    let _ = writeln!(out, "SCALAR {a} {b} {c} {dd} {k}");
}

pub fn to_text(d: &Diagram) -> String {
    let mut s = format!("{HEADER}\n");
    write_body(d, &mut s);
    s
}

/// Incremental parser, shared with formats that embed diagram bodies.
#[derive(Default)]
pub struct BodyParser {
    d: Diagram,
    ids: HashMap<String, VId>,
}

impl BodyParser {
    pub fn new() -> Self {
        BodyParser { d: Diagram::new(), ids: HashMap::new() }
    }

    /// Feeds one non-empty line. Returns `Ok(false)` if the line is not a
    /// diagram body line.
    pub fn line(&mut self, n: usize, line: &str) -> Result<bool, TextError> {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let Some(&tag) = toks.first() else { return Ok(true) };
        let int = |s: &str| s.parse::<i64>().map_err(|_| err(n, format!("bad integer {s:?}")));
        match tag {
            "V" => {
                if toks.len() != 4 && toks.len() != 6 {
                    return Err(err(n, "expected V id kind phase [qubit row]"));
                }
                let p = Phase::new(int(toks[3])?);
                let kind = match toks[2] {
                    "B" => VertexKind::Boundary,
                    "Z" => VertexKind::Z(p),
                    "X" => VertexKind::X(p),
                    k => return Err(err(n, format!("unknown vertex kind {k:?}"))),
                };
                let (q, r) = if toks.len() == 6 { (int(toks[4])? as i32, int(toks[5])? as i32) } else { (-1, -1) };
                if self.ids.contains_key(toks[1]) {
                    return Err(err(n, format!("duplicate vertex {}", toks[1])));
                }
                let v = self.d.add_vertex_at(kind, q, r);
                self.ids.insert(toks[1].to_string(), v);
            }
            "E" => {
                if toks.len() != 4 {
                    return Err(err(n, "expected E id1 id2 kind"));
                }
                let kind = match toks[3] {
                    "P" => EdgeKind::Plain,
                    "H" => EdgeKind::Hadamard,
                    "S" => EdgeKind::Star,
                    k => return Err(err(n, format!("unknown edge kind {k:?}"))),
                };
                let a = self.lookup(n, toks[1])?;
                let b = self.lookup(n, toks[2])?;
                self.d.add_edge(a, b, kind).map_err(|e| err(n, e.to_string()))?;
            }
            "IN" | "OUT" => {
                let ids = toks[1..].iter().map(|t| self.lookup(n, t)).collect::<Result<Vec<_>, _>>()?;
                if tag == "IN" {
                    self.d.set_inputs(ids);
                } else {
                    self.d.set_outputs(ids);
                }
            }
            "SCALAR" => {
                let s: ExactScalar = toks[1..].join(" ").parse().map_err(|e| err(n, format!("{e}")))?;
                self.d.set_scalar(s);
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn lookup(&self, n: usize, t: &str) -> Result<VId, TextError> {
        self.ids.get(t).copied().ok_or_else(|| err(n, format!("unknown vertex {t:?}")))
    }

    pub fn finish(self, n: usize) -> Result<Diagram, TextError> {
        self.d.validate().map_err(|e| err(n, e.to_string()))?;
        Ok(self.d)
    }
}

pub fn from_text(s: &str) -> Result<Diagram, TextError> {
    let mut lines =
        s.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, l)) => return Err(err(n, format!("expected header {HEADER:?}, found {l:?}"))),
        None => return Err(err(0, "empty input")),
    }
    let mut p = BodyParser::new();
    let mut last = 1;
    for (n, l) in lines {
        last = n;
        if !p.line(n, l)? {
            return Err(err(n, format!("unexpected line {l:?}")));
        }
    }
    p.finish(last)
}
