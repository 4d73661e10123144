//! Library of exact stabilizer decompositions: elementary and dynamic spider
//! splits, star-edge rules and star-state rules.
//!
//! A star edge carries `[[1,1],[1,0]]`; up to a scalar it is the same map as a
//! zero-labelled H-box.

mod builders;
mod decomp;
mod rule;
pub mod stabilizer;

use std::path::Path;

pub use builders::{dynamic_lhs, dynamic_rule, elementary_rule, scaled, star_edges_lhs, star_state_lhs};
pub use decomp::{apply_star_edge_rule, apply_star_state_rule, dynamic_decompose, elementary_decompose, splice};
pub use rule::{rule_from_text, rule_to_text, DecompositionRule, RuleFormatError, RULE_HEADER};

use zx_core::{EId, Phase, VId};
use zx_oracle::Oracle;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("no vertex {0}")]
    NoVertex(VId),
    #[error("no edge {0}")]
    NoEdge(EId),
    #[error("vertex {0} is a boundary")]
    Boundary(VId),
    #[error("vertex {0} is not a Z spider")]
    NotZ(VId),
    #[error("vertex {0} has no star edges")]
    NoStars(VId),
    #[error("edge {0} is not a star edge between two vertices")]
    NotStar(EId),
    #[error("vertex {0} is not a Z leaf behind a star edge with the rule's phase")]
    NotStarLeaf(VId),
    #[error("rule expects {expected} legs, site has {found}")]
    Arity { expected: usize, found: usize },
    #[error("no star-edge rule for {0} edges")]
    EdgeCount(usize),
    #[error("the {0}-leg star state with phase π is in fact Clifford")]
    Clifford(usize),
    #[error("no star-state rule for {legs} legs with phase {phase}")]
    Unsupported { legs: usize, phase: Phase },
    #[error("rule {0} not in catalog")]
    Missing(String),
    #[error("{path}: {err}")]
    Load { path: String, err: String },
}

const FIXTURES: &[(&str, &str)] = &[
    ("star_edge_1", include_str!("../rules/star_edge_1.zxr")),
    ("star_edge_2", include_str!("../rules/star_edge_2.zxr")),
    ("star_edge_3", include_str!("../rules/star_edge_3.zxr")),
    ("star_state_3_0", include_str!("../rules/star_state_3_0.zxr")),
    ("star_state_3_p", include_str!("../rules/star_state_3_p.zxr")),
    ("star_state_3_m", include_str!("../rules/star_state_3_m.zxr")),
    ("star_state_4_p", include_str!("../rules/star_state_4_p.zxr")),
    ("star_state_4_m", include_str!("../rules/star_state_4_m.zxr")),
    ("star_state_5_0", include_str!("../rules/star_state_5_0.zxr")),
    ("star_state_5_p", include_str!("../rules/star_state_5_p.zxr")),
    ("star_state_5_m", include_str!("../rules/star_state_5_m.zxr")),
];

/// Fixture id of a star-state rule.
pub fn star_state_id(legs: usize, phase: Phase) -> Result<String, CatalogError> {
    let tag = match (legs, phase.eighths()) {
        (3, 4) => return Err(CatalogError::Clifford(legs)),
        (3 | 5, 0) => "0",
        (3..=5, 2) => "p",
        (3..=5, 6) => "m",
        _ => return Err(CatalogError::Unsupported { legs, phase }),
    };
    Ok(format!("star_state_{legs}_{tag}"))
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportEntry {
    pub id: String,
    pub passed: bool,
    pub branches: usize,
    pub terms_p: u32,
    pub reduction_r: u32,
    pub scaling: f64,
}

/// An immutable set of rules.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    rules: Vec<DecompositionRule>,
}

impl Catalog {
    pub fn new(rules: Vec<DecompositionRule>) -> Self {
        Catalog { rules }
    }

    /// The embedded fixtures plus the elementary and dynamic (m = 1..5) rules.
    pub fn shipped() -> Self {
        let mut rules: Vec<DecompositionRule> = FIXTURES
            .iter()
            .map(|(name, text)| rule_from_text(text).unwrap_or_else(|e| panic!("embedded rule {name}: {e}")))
            .collect();
        rules.push(elementary_rule());
        rules.extend((1..=5).map(dynamic_rule));
        Catalog { rules }
    }

    /// Loads every `*.zxr` file of a directory, sorted by file name.
    pub fn load_dir(dir: &Path) -> Result<Self, CatalogError> {
        let io = |e: std::io::Error| CatalogError::Load { path: dir.display().to_string(), err: e.to_string() };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "zxr"))
            .collect();
        paths.sort();
        let mut rules = Vec::new();
        for p in paths {
            let text = std::fs::read_to_string(&p).map_err(io)?;
            let r = rule_from_text(&text)
                .map_err(|e| CatalogError::Load { path: p.display().to_string(), err: e.to_string() })?;
            rules.push(r);
        }
        Ok(Catalog { rules })
    }

    pub fn rules(&self) -> &[DecompositionRule] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Result<&DecompositionRule, CatalogError> {
        self.rules.iter().find(|r| r.id == id).ok_or_else(|| CatalogError::Missing(id.to_string()))
    }

    pub fn star_edge_rule(&self, k: usize) -> Result<&DecompositionRule, CatalogError> {
        if !(1..=3).contains(&k) {
            return Err(CatalogError::EdgeCount(k));
        }
        self.get(&format!("star_edge_{k}"))
    }

    pub fn star_state_rule(&self, legs: usize, phase: Phase) -> Result<&DecompositionRule, CatalogError> {
        self.get(&star_state_id(legs, phase)?)
    }

    /// Verifies every rule exactly.
    pub fn verify_all(&self) -> Vec<ReportEntry> {
        let oracle = Oracle::default();
        self.rules
            .iter()
            .map(|r| ReportEntry {
                id: r.id.clone(),
                passed: r.verify(&oracle).unwrap_or(false),
                branches: r.branches.len(),
                terms_p: r.terms_p,
                reduction_r: r.reduction_r,
                scaling: r.scaling(),
            })
            .collect()
    }
}
