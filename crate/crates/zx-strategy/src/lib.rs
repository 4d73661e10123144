//! Decomposition drivers. A diagram is preprocessed, then expanded as a tree
//! of terms: each term picks a decomposition, its children are simplified and
//! zero terms dropped, until every term is star-free and Clifford.
//!
//! [`Strategy::Weighted`] picks the Z spider with the largest
//! [`master_weight`]; [`Strategy::Greedy`] picks the applicable rule with the
//! smallest scaling exponent. With the `parallel` feature (on by default)
//! each level of the tree is expanded on the rayon pool; results do not
//! depend on the number of threads.

mod expand;
mod pipeline;
pub mod samples;
mod weight;

pub use expand::{
    apply_action, choose_greedy, choose_weighted, decompose_cut, decompose_greedy, decompose_until, decompose_weighted,
    decompose_with_stats, depth_limit, expand, expand_until, is_terminal, preprocess, Action, ExpansionStats, Strategy,
};
pub use pipeline::{count_peaks, run_pipeline, run_pipeline_with, DiffusionMode, RunResult, Timings};
pub use weight::{candidates, master_weight, select_master, MasterCandidate, EXTRA_WEIGHT};

use zx_core::VId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrategyError {
    #[error("vertex {0} is not a Z spider")]
    NotZ(VId),
    #[error("term tree deeper than the bound of {limit} actions")]
    DepthExceeded { limit: usize },
    #[error("deadline passed")]
    Timeout,
    #[error("peak counting needs a non-empty vector")]
    EmptyProbabilities,
    #[error("{qubits} qubits exceed the contraction limit of {limit}")]
    TooWide { qubits: usize, limit: usize },
    #[error(transparent)]
    Oracle(#[from] zx_oracle::OracleError),
    #[error(transparent)]
    Circuit(#[from] zx_circuits::CircuitError),
    #[error(transparent)]
    Catalog(#[from] zx_catalog::CatalogError),
}
