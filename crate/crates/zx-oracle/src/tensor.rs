use std::fmt;
use std::ops::Mul;

use zx_core::ExactScalar;

/// Dense `2^outputs × 2^inputs` matrix. Row and column indices are bitstrings
/// of the boundary wires in list order, first wire most significant.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseTensor {
    n_out: usize,
    n_in: usize,
    data: Vec<ExactScalar>,
}

impl DenseTensor {
    pub fn zeros(n_out: usize, n_in: usize) -> Self {
        DenseTensor { n_out, n_in, data: vec![ExactScalar::ZERO; 1 << (n_out + n_in)] }
    }

    pub fn identity(n: usize) -> Self {
        let mut t = Self::zeros(n, n);
        for i in 0..1usize << n {
            t.set(i, i, ExactScalar::ONE);
        }
        t
    }

    pub fn scalar(s: ExactScalar) -> Self {
        DenseTensor { n_out: 0, n_in: 0, data: vec![s] }
    }

    /// Builds from row-major data.
    pub fn from_rows(n_out: usize, n_in: usize, data: Vec<ExactScalar>) -> Self {
        assert_eq!(data.len(), 1 << (n_out + n_in), "data length");
        DenseTensor { n_out, n_in, data }
    }

    pub fn from_ints(n_out: usize, n_in: usize, data: &[i64]) -> Self {
        Self::from_rows(n_out, n_in, data.iter().map(|&x| ExactScalar::from_int(x)).collect())
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn rows(&self) -> usize {
        1 << self.n_out
    }

    pub fn cols(&self) -> usize {
        1 << self.n_in
    }

    pub fn get(&self, r: usize, c: usize) -> ExactScalar {
        self.data[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        let cols = self.cols();
        self.data[r * cols + c] = v;
    }

    pub fn data(&self) -> &[ExactScalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<ExactScalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    pub fn scaled(mut self, s: ExactScalar) -> Self {
        for x in &mut self.data {
            *x *= s;
        }
        self
    }

    /// `self · rhs`.
    pub fn matmul(&self, rhs: &DenseTensor) -> DenseTensor {
        assert_eq!(self.n_in, rhs.n_out, "inner dimension");
        let mut out = DenseTensor::zeros(self.n_out, rhs.n_in);
        for r in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols() {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let i = r * out.cols() + c;
                        out.data[i] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, `self` on the leading wires.
    pub fn kron(&self, rhs: &DenseTensor) -> DenseTensor {
        let mut out = DenseTensor::zeros(self.n_out + rhs.n_out, self.n_in + rhs.n_in);
        for r1 in 0..self.rows() {
            for c1 in 0..self.cols() {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows() {
                    for c2 in 0..rhs.cols() {
                        out.set(r1 * rhs.rows() + r2, c1 * rhs.cols() + c2, a * rhs.get(r2, c2));
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum. Shapes must agree.
    pub fn add(&self, rhs: &DenseTensor) -> DenseTensor {
        assert_eq!((self.n_out, self.n_in), (rhs.n_out, rhs.n_in), "shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect();
        DenseTensor { n_out: self.n_out, n_in: self.n_in, data }
    }

    /// Returns `s` with `self == s · rhs` if one exists and `rhs` is nonzero.
    pub fn ratio_to(&self, rhs: &DenseTensor) -> Option<ExactScalar> {
        if (self.n_out, self.n_in) != (rhs.n_out, rhs.n_in) {
            return None;
        }
        let i = rhs.data.iter().position(|x| !x.is_zero())?;
        let s = self.data[i].checked_div(&rhs.data[i])?;
        self.data.iter().zip(&rhs.data).all(|(a, b)| *a == s * *b).then_some(s)
    }
}

impl Mul<&DenseTensor> for &DenseTensor {
    type Output = DenseTensor;
    fn mul(self, rhs: &DenseTensor) -> DenseTensor {
        self.matmul(rhs)
    }
}

impl fmt::Debug for DenseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseTensor {}x{}", self.rows(), self.cols())?;
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
