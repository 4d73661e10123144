use std::fmt::Write as _;

use zx_core::text::{write_body, BodyParser, TextError};
use zx_core::{Diagram, ExactScalar, Phase};
use zx_oracle::{Oracle, OracleError};

/// A decomposition `lhs = Σ coeffᵢ · branchᵢ` with its scaling metadata.
///
/// `terms_p` branches remove `reduction_r` units of the resource (star edges
/// for every shipped rule), giving the exponent `β = log₂(p) / r`.
#[derive(Clone, Debug)]
pub struct DecompositionRule {
    pub id: String,
    /// Boundary count of the left-hand side.
    pub legs: usize,
    /// Leaf phase for star-state rules.
    pub phase: Option<Phase>,
    pub terms_p: u32,
    pub reduction_r: u32,
    pub lhs: Diagram,
    pub branches: Vec<(ExactScalar, Diagram)>,
}

impl DecompositionRule {
    pub fn scaling(&self) -> f64 {
        (self.terms_p as f64).log2() / self.reduction_r as f64
    }

    /// Exact check against the oracle.
    pub fn verify(&self, oracle: &Oracle) -> Result<bool, OracleError> {
        if self.branches.len() != self.terms_p as usize {
            return Ok(false);
        }
        oracle.verify_rule(&self.lhs, &self.branches)
    }

    pub fn coefficients(&self) -> Vec<ExactScalar> {
        self.branches.iter().map(|(c, _)| *c).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleFormatError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error(transparent)]
    Diagram(#[from] TextError),
}

pub const RULE_HEADER: &str = "zxrule 1";

/// Serializes a rule in the fixture format.
pub fn rule_to_text(r: &DecompositionRule) -> String {
    let mut s = format!("{RULE_HEADER}\n");
    let _ = writeln!(s, "id {}", r.id);
    let _ = writeln!(s, "legs {}", r.legs);
    match r.phase {
        Some(p) => {
            let _ = writeln!(s, "phase {}", p.eighths());
        }
        None => s.push_str("phase -\n"),
    }
    let _ = writeln!(s, "terms_p {}", r.terms_p);
    let _ = writeln!(s, "reduction_r {}", r.reduction_r);
    s.push_str("lhs\n");
    write_body(&r.lhs, &mut s);
    s.push_str("end\n");
    for (c, b) in &r.branches {
        let (a, bb, cc, d, k) = c.parts();
        let _ = writeln!(s, "branch {a} {bb} {cc} {d} {k}");
        write_body(b, &mut s);
        s.push_str("end\n");
    }
    s
}

pub fn rule_from_text(text: &str) -> Result<DecompositionRule, RuleFormatError> {
    let bad = |n: usize, m: &str| RuleFormatError::Line(n, m.to_string());
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, RULE_HEADER)) => {}
        Some((n, _)) => return Err(bad(n, "expected zxrule header")),
        None => return Err(bad(0, "empty rule")),
    }
    let mut id = None;
    let mut legs = None;
    let mut phase = None;
    let mut terms_p = None;
    let mut reduction_r = None;
    let mut lhs = None;
    let mut branches = Vec::new();
    // (coefficient or None for lhs, parser)
    let mut open: Option<(Option<ExactScalar>, BodyParser)> = None;
    for (n, l) in lines {
        if let Some((coeff, mut p)) = open.take() {
            if l == "end" {
                let d = p.finish(n)?;
                match coeff {
                    None => lhs = Some(d),
                    Some(c) => branches.push((c, d)),
                }
            } else {
                if !p.line(n, l)? {
                    return Err(bad(n, "unexpected line inside diagram"));
                }
                open = Some((coeff, p));
            }
            continue;
        }
        let (key, val) = l.split_once(' ').unwrap_or((l, ""));
        let int = |v: &str| v.trim().parse::<u32>().map_err(|_| bad(n, "expected integer"));
        match key {
            "id" => id = Some(val.trim().to_string()),
            "legs" => legs = Some(int(val)? as usize),
            "phase" => {
                phase = Some(match val.trim() {
                    "-" => None,
                    v => Some(Phase::new(v.parse::<i64>().map_err(|_| bad(n, "bad phase"))?)),
                })
            }
            "terms_p" => terms_p = Some(int(val)?),
            "reduction_r" => reduction_r = Some(int(val)?),
            "lhs" => open = Some((None, BodyParser::new())),
            "branch" => {
                let c: ExactScalar = val.parse().map_err(|_| bad(n, "bad coefficient"))?;
                open = Some((Some(c), BodyParser::new()));
            }
            _ => return Err(bad(n, "unknown key")),
        }
    }
    if open.is_some() {
        return Err(bad(0, "unterminated diagram"));
    }
    let missing = |what: &str| RuleFormatError::Line(0, format!("missing {what}"));
    let rule = DecompositionRule {
        id: id.ok_or_else(|| missing("id"))?,
        legs: legs.ok_or_else(|| missing("legs"))?,
        phase: phase.ok_or_else(|| missing("phase"))?,
        terms_p: terms_p.ok_or_else(|| missing("terms_p"))?,
        reduction_r: reduction_r.ok_or_else(|| missing("reduction_r"))?,
        lhs: lhs.ok_or_else(|| missing("lhs"))?,
        branches,
    };
    if rule.reduction_r == 0 {
        return Err(missing("nonzero reduction_r"));
    }
    Ok(rule)
}
