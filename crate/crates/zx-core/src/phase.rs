use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::ExactScalar;

/// A spider phase as an integer multiple of π/4, kept in `[0, 8)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ZERO: Phase = Phase(0);
    pub const PI: Phase = Phase(4);
    pub const HALF_PI: Phase = Phase(2);
    pub const MINUS_HALF_PI: Phase = Phase(6);

    pub fn new(eighths: i64) -> Self {
        Phase(eighths.rem_euclid(8) as u8)
    }

    pub fn eighths(self) -> u8 {
        self.0
    }

    /// Multiple of π/2.
    pub fn is_clifford(self) -> bool {
        self.0 % 2 == 0
    }

    /// 0 or π.
    pub fn is_pauli(self) -> bool {
        self.0 % 4 == 0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `e^{iα}`.
    pub fn exp(self) -> ExactScalar {
        ExactScalar::omega(self.0 as i64)
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 8)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase((self.0 + 8 - rhs.0) % 8)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase((8 - self.0) % 8)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π/4", self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            4 => write!(f, "π"),
            2 => write!(f, "π/2"),
            6 => write!(f, "3π/2"),
            n => write!(f, "{n}π/4"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wraps() {
        assert_eq!(Phase::new(9), Phase::new(1));
        assert_eq!(Phase::new(-2), Phase::MINUS_HALF_PI);
        assert_eq!(Phase::PI + Phase::PI, Phase::ZERO);
        assert_eq!(-Phase::new(1), Phase::new(7));
        assert!(Phase::HALF_PI.is_clifford());
        assert!(!Phase::new(3).is_clifford());
    }
}
