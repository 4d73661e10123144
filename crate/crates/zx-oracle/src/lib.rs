//! Exact brute-force contraction of ZX diagrams, used as ground truth for
//! every rewrite and decomposition.

mod contract;
mod tensor;

pub use tensor::DenseTensor;

use zx_core::{Diagram, DiagramError, ExactScalar};

pub const DEFAULT_WIRE_LIMIT: usize = 22;
pub const DEFAULT_WIDTH_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{wires} boundary wires exceed the limit of {limit}")]
    WireLimit { wires: usize, limit: usize },
    #[error("intermediate tensor over {width} wires exceeds the limit of {limit}")]
    WidthLimit { width: usize, limit: usize },
    #[error("statevector requested for a diagram with {0} inputs")]
    HasInputs(usize),
    #[error("boundary arity mismatch: expected {expected:?}, found {found:?}")]
    Arity { expected: (usize, usize), found: (usize, usize) },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Contraction settings.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    /// Maximum number of boundary wires.
    pub wire_limit: usize,
    /// Maximum number of wires of any intermediate tensor.
    pub width_limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { wire_limit: DEFAULT_WIRE_LIMIT, width_limit: DEFAULT_WIDTH_LIMIT }
    }
}

impl Oracle {
    pub fn contract(&self, d: &Diagram) -> Result<DenseTensor, OracleError> {
        contract::contract(d, self.wire_limit, self.width_limit)
    }

    pub fn statevector(&self, d: &Diagram) -> Result<Vec<ExactScalar>, OracleError> {
        if !d.inputs().is_empty() {
            return Err(OracleError::HasInputs(d.inputs().len()));
        }
        Ok(self.contract(d)?.into_data())
    }

    /// Exact check of `lhs == Σ cᵢ·branchᵢ`.
    pub fn verify_rule(&self, lhs: &Diagram, branches: &[(ExactScalar, Diagram)]) -> Result<bool, OracleError> {
        let target = self.contract(lhs)?;
        let shape = (lhs.outputs().len(), lhs.inputs().len());
        let mut acc = DenseTensor::zeros(shape.0, shape.1);
        for (c, b) in branches {
            let found = (b.outputs().len(), b.inputs().len());
            if found != shape {
                return Err(OracleError::Arity { expected: shape, found });
            }
            acc = acc.add(&self.contract(b)?.scaled(*c));
        }
        Ok(acc == target)
    }
}

pub fn contract(d: &Diagram) -> Result<DenseTensor, OracleError> {
    Oracle::default().contract(d)
}

pub fn statevector(d: &Diagram) -> Result<Vec<ExactScalar>, OracleError> {
    Oracle::default().statevector(d)
}

pub fn verify_rule(lhs: &Diagram, branches: &[(ExactScalar, Diagram)]) -> Result<bool, OracleError> {
    Oracle::default().verify_rule(lhs, branches)
}
