//! Core data model: exact scalars, phases, ZX diagrams with plain, Hadamard
//! and star edges, and weighted terms.

mod diagram;
mod phase;
mod scalar;
mod term;
pub mod text;

pub use diagram::{Diagram, DiagramError, EId, Edge, EdgeKind, VId, VertexKind};
pub use phase::Phase;
pub use scalar::{ExactScalar, ParseScalarError};
pub use term::{Term, TermSum};
