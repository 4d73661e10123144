//! Search for stabilizer decompositions of small target states: an
//! enumeration of all stabilizer states on up to three qubits, an exact
//! coefficient solver and a simulated-annealing walk over term subsets.
//! Found decompositions are emitted as catalog rules.

mod anneal;
mod library;
mod solve;

pub use anneal::{anneal, anneal_chains, AnnealRun, AnnealSchedule, Decomposition};
pub use library::{enumerate_stabilizers, StabilizerLibrary, MAX_QUBITS};
pub use solve::{snap, solve_coefficients, MAX_K, RESIDUAL_TOL};

use zx_catalog::stabilizer::stabilizer_diagram;
use zx_catalog::{star_state_lhs, DecompositionRule};
use zx_core::{Diagram, EdgeKind, ExactScalar, Phase};
use zx_oracle::Oracle;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiscoveryError {
    #[error("{n} qubits requested; the library is limited to 1..={max}")]
    TooManyQubits { n: usize, max: usize },
    #[error("target has {target} amplitudes, library states have {library}")]
    Dimension { target: usize, library: usize },
    #[error("cannot pick {k} terms from {available} states")]
    Terms { k: usize, available: usize },
    #[error("bad schedule {0}")]
    Schedule(String),
    #[error("unknown target {0:?}")]
    UnknownTarget(String),
    #[error("decomposition failed exact verification")]
    Verification,
    #[error(transparent)]
    Oracle(#[from] zx_oracle::OracleError),
}

/// A named state to decompose: its diagram and the metadata a rule needs.
#[derive(Clone, Debug)]
pub struct Target {
    pub id: String,
    pub diagram: Diagram,
    /// Star edges the diagram contains.
    pub stars: usize,
    pub phase: Option<Phase>,
}

impl Target {
    pub fn qubits(&self) -> usize {
        self.diagram.outputs().len()
    }

    pub fn statevector(&self) -> Result<Vec<ExactScalar>, DiscoveryError> {
        Ok(zx_oracle::statevector(&self.diagram)?)
    }

    pub fn is_real(&self) -> Result<bool, DiscoveryError> {
        Ok(self.statevector()?.iter().all(|a| *a == a.conj()))
    }
}

/// `star_state_<legs>_<0|p|m|pi>` for `legs` Z leaves with phase 0, π/2,
/// −π/2 or π behind star edges, or `star_edge` for one star edge bent into a
/// two-qubit state.
pub fn target_by_name(name: &str) -> Result<Target, DiscoveryError> {
    let bad = || DiscoveryError::UnknownTarget(name.to_string());
    if name == "star_edge" {
        let mut d = Diagram::new();
        let a = d.add_output(0);
        let b = d.add_output(1);
        d.add_edge(a, b, EdgeKind::Star).expect("live");
        return Ok(Target { id: name.into(), diagram: d, stars: 1, phase: None });
    }
    let rest = name.strip_prefix("star_state_").ok_or_else(bad)?;
    let (legs, tag) = rest.split_once('_').ok_or_else(bad)?;
    let legs: usize = legs.parse().map_err(|_| bad())?;
    let phase = match tag {
        "0" => Phase::ZERO,
        "p" => Phase::HALF_PI,
        "m" => Phase::MINUS_HALF_PI,
        "pi" => Phase::PI,
        _ => return Err(bad()),
    };
    if legs == 0 || legs > MAX_QUBITS {
        return Err(DiscoveryError::TooManyQubits { n: legs, max: MAX_QUBITS });
    }
    Ok(Target { id: name.into(), diagram: star_state_lhs(legs, phase), stars: legs, phase: Some(phase) })
}

/// Turns a decomposition into a catalog rule and checks it exactly.
pub fn certificate(
    target: &Target,
    library: &StabilizerLibrary,
    found: &Decomposition,
) -> Result<DecompositionRule, DiscoveryError> {
    let branches = found
        .indices
        .iter()
        .zip(&found.coefficients)
        .map(|(&i, &c)| stabilizer_diagram(&library.states[i]).map(|d| (c, d)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| DiscoveryError::Verification)?;
    let rule = DecompositionRule {
        id: format!("found_{}_{}", target.id, found.indices.len()),
        legs: target.qubits(),
        phase: target.phase,
        terms_p: found.indices.len() as u32,
        reduction_r: target.stars as u32,
        lhs: target.diagram.clone(),
        branches,
    };
    if rule.verify(&Oracle::default())? {
        Ok(rule)
    } else {
        Err(DiscoveryError::Verification)
    }
}
