use crate::{Diagram, ExactScalar};

/// One summand of a running linear combination.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: ExactScalar,
    pub diagram: Diagram,
}

pub type TermSum = Vec<Term>;

impl Term {
    pub fn new(coeff: ExactScalar, diagram: Diagram) -> Self {
        Term { coeff, diagram }
    }

    /// Wraps a diagram with coefficient 1.
    pub fn unit(diagram: Diagram) -> Self {
        Term { coeff: ExactScalar::ONE, diagram }
    }

    /// A zero coefficient or zero diagram scalar makes the term drop out of any sum.
    pub fn is_prunable(&self) -> bool {
        self.coeff.is_zero() || self.diagram.scalar().is_zero()
    }

    /// Moves the coefficient into the diagram scalar.
    pub fn into_diagram(mut self) -> Diagram {
        self.diagram.mul_scalar(self.coeff);
        self.diagram
    }
}
