//! Exact scalars of the form `(a + b·i + (c + d·i)·√2) / 2^k`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of the ring `Z[i, √2][1/2]`.
///
/// Values are stored in canonical form: either `k == 0` or at least one of
/// `a, b, c, d` is odd. Equality is therefore structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    k: u32,
}

/// Wide intermediate used by the arithmetic before narrowing.
#[derive(Clone, Copy)]
struct Wide {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
    k: u32,
}

impl Wide {
    fn reduce(mut self) -> Wide {
        if self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0 {
            self.k = 0;
            return self;
        }
        while self.k > 0 && (self.a | self.b | self.c | self.d) & 1 == 0 {
            self.a >>= 1;
            self.b >>= 1;
            self.c >>= 1;
            self.d >>= 1;
            self.k -= 1;
        }
        self
    }

    fn narrow(self) -> ExactScalar {
        let w = self.reduce();
        let cast = |x: i128| i64::try_from(x).expect("exact scalar overflow");
        ExactScalar { a: cast(w.a), b: cast(w.b), c: cast(w.c), d: cast(w.d), k: w.k }
    }

    fn shifted(self, bits: u32) -> Wide {
        let sh = |x: i128| x.checked_mul(1i128 << bits).expect("exact scalar overflow");
        Wide { a: sh(self.a), b: sh(self.b), c: sh(self.c), d: sh(self.d), k: self.k + bits }
    }
}

impl From<ExactScalar> for Wide {
    fn from(s: ExactScalar) -> Wide {
        Wide { a: s.a as i128, b: s.b as i128, c: s.c as i128, d: s.d as i128, k: s.k }
    }
}

fn wide_mul(x: Wide, y: Wide) -> Wide {
    // (p + q√2)(r + s√2) = (pr + 2qs) + (ps + qr)√2 with Gaussian p, q, r, s.
    let gm = |(xr, xi): (i128, i128), (yr, yi): (i128, i128)| (xr * yr - xi * yi, xr * yi + xi * yr);
    let p = (x.a, x.b);
    let q = (x.c, x.d);
    let r = (y.a, y.b);
    let s = (y.c, y.d);
    let pr = gm(p, r);
    let qs = gm(q, s);
    let ps = gm(p, s);
    let qr = gm(q, r);
    Wide { a: pr.0 + 2 * qs.0, b: pr.1 + 2 * qs.1, c: ps.0 + qr.0, d: ps.1 + qr.1, k: x.k + y.k }
}

fn wide_add(x: Wide, y: Wide) -> Wide {
    let (x, y) = if x.k < y.k { (x.shifted(y.k - x.k), y) } else { (x, y.shifted(x.k - y.k)) };
    Wide { a: x.a + y.a, b: x.b + y.b, c: x.c + y.c, d: x.d + y.d, k: x.k }
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar { a: 0, b: 0, c: 0, d: 0, k: 0 };
    pub const ONE: ExactScalar = ExactScalar { a: 1, b: 0, c: 0, d: 0, k: 0 };
    pub const I: ExactScalar = ExactScalar { a: 0, b: 1, c: 0, d: 0, k: 0 };
    pub const SQRT2: ExactScalar = ExactScalar { a: 0, b: 0, c: 1, d: 0, k: 0 };
    /// `1/√2`, stored as `√2/2`.
    pub const INV_SQRT2: ExactScalar = ExactScalar { a: 0, b: 0, c: 1, d: 0, k: 1 };
    pub const HALF: ExactScalar = ExactScalar { a: 1, b: 0, c: 0, d: 0, k: 1 };

    /// Builds `(a + b·i + (c + d·i)·√2) / 2^k` and canonicalizes it.
    pub fn new(a: i64, b: i64, c: i64, d: i64, k: u32) -> Self {
        Wide { a: a as i128, b: b as i128, c: c as i128, d: d as i128, k }.narrow()
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar { a: n, ..Self::ZERO }
    }

    /// Gaussian integer `re + im·i`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        ExactScalar { a: re, b: im, ..Self::ZERO }
    }

    /// Canonical components `(a, b, c, d, k)`.
    pub fn parts(&self) -> (i64, i64, i64, i64, u32) {
        (self.a, self.b, self.c, self.d, self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    /// `e^{iπ·j/4}`.
    pub fn omega(eighths: i64) -> Self {
        let s = match eighths.rem_euclid(8) {
            0 => (1, 0, 0, 0, 0),
            1 => (0, 0, 1, 1, 1),
            2 => (0, 1, 0, 0, 0),
            3 => (0, 0, -1, 1, 1),
            4 => (-1, 0, 0, 0, 0),
            5 => (0, 0, -1, -1, 1),
            6 => (0, -1, 0, 0, 0),
            _ => (0, 0, 1, -1, 1),
        };
        Self::new(s.0, s.1, s.2, s.3, s.4)
    }

    /// `√2^n` for any integer `n`.
    pub fn sqrt2_pow(n: i32) -> Self {
        let e = n.unsigned_abs();
        let whole = e / 2;
        let odd = e % 2 == 1;
        if n >= 0 {
            let base = Self::from_int(1i64 << whole);
            if odd {
                base * Self::SQRT2
            } else {
                base
            }
        } else {
            let base = Self::new(1, 0, 0, 0, whole);
            if odd {
                base * Self::INV_SQRT2
            } else {
                base
            }
        }
    }

    /// Multiplies by `√2^n`.
    pub fn mul_sqrt2_pow(self, n: i32) -> Self {
        self * Self::sqrt2_pow(n)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        ExactScalar { a: self.a, b: -self.b, c: self.c, d: -self.d, k: self.k }
    }

    /// Galois conjugate `√2 ↦ -√2`.
    fn sigma(&self) -> Self {
        ExactScalar { a: self.a, b: self.b, c: -self.c, d: -self.d, k: self.k }
    }

    /// Exact quotient `self / rhs` if it exists in the ring.
    pub fn checked_div(&self, rhs: &ExactScalar) -> Option<ExactScalar> {
        if rhs.is_zero() {
            return None;
        }
        // rhs = y / 2^k with y = x + w√2; y·σ(y) = g is a Gaussian integer.
        let y = ExactScalar { k: 0, ..*rhs };
        let g = y * y.sigma();
        debug_assert!(g.c == 0 && g.d == 0 && g.k == 0);
        let n = (g.a as i128) * (g.a as i128) + (g.b as i128) * (g.b as i128);
        let twos = n.trailing_zeros();
        let odd = n >> twos;
        let num: Wide = wide_mul(wide_mul(Wide::from(*self), Wide::from(y.sigma())), Wide::from(g.conj()));
        if num.a % odd != 0 || num.b % odd != 0 || num.c % odd != 0 || num.d % odd != 0 {
            return None;
        }
        let q = Wide { a: num.a / odd, b: num.b / odd, c: num.c / odd, d: num.d / odd, k: num.k + twos };
        // multiply back the 2^k of rhs
        let q = wide_mul(q, Wide { a: 1i128 << rhs.k, b: 0, c: 0, d: 0, k: 0 });
        Some(q.narrow())
    }

    /// Multiplicative inverse, if it lies in the ring.
    pub fn inv(&self) -> Option<ExactScalar> {
        Self::ONE.checked_div(self)
    }

    /// Floating point value `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        let s = std::f64::consts::SQRT_2;
        let den = (2f64).powi(self.k as i32);
        ((self.a as f64 + self.c as f64 * s) / den, (self.b as f64 + self.d as f64 * s) / den)
    }

    /// `|z|^2` in floating point.
    pub fn norm_sqr_f64(&self) -> f64 {
        let (re, im) = self.to_f64();
        re * re + im * im
    }

    /// `|z|^2` as an exact (real) scalar.
    pub fn norm_sqr(&self) -> ExactScalar {
        *self * self.conj()
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        wide_add(self.into(), rhs.into()).narrow()
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        self + (-rhs)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -self.a, b: -self.b, c: -self.c, d: -self.d, k: self.k }
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        if rhs == Self::ONE {
            return self;
        }
        if self == Self::ONE {
            return rhs;
        }
        wide_mul(self.into(), rhs.into()).narrow()
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, rhs: ExactScalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for ExactScalar {
    fn mul_assign(&mut self, rhs: ExactScalar) {
        *self = *self * rhs;
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> ExactScalar {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> ExactScalar {
        iter.fold(Self::ZERO, |acc, x| acc + *x)
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> ExactScalar {
        iter.fold(Self::ONE, |acc, x| acc * x)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({} {} {} {} {} = {})", self.a, self.b, self.c, self.d, self.k, self)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut push = |coef: i64, unit: &str| {
            if coef == 0 {
                return;
            }
            let body = match (coef.abs(), unit.is_empty()) {
                (1, false) => unit.to_string(),
                (n, _) => format!("{n}{unit}"),
            };
            let sign = if coef < 0 {
                "-"
            } else if parts.is_empty() {
                ""
            } else {
                "+"
            };
            parts.push(format!("{sign}{body}"));
        };
        push(self.a, "");
        push(self.b, "i");
        push(self.c, "√2");
        push(self.d, "√2i");
        let num = parts.concat();
        match (self.k, parts.len()) {
            (0, _) => write!(f, "{num}"),
            (k, 1) => write!(f, "{num}/{}", 1u64 << k),
            (k, _) => write!(f, "({num})/{}", 1u64 << k),
        }
    }
}

/// Error returned when parsing the `a b c d k` tuple form fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed scalar tuple: {0}")]
pub struct ParseScalarError(pub String);

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    /// Parses the whitespace separated tuple `a b c d k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 5 {
            return Err(ParseScalarError(s.to_string()));
        }
        let int = |t: &str| t.parse::<i64>().map_err(|_| ParseScalarError(s.to_string()));
        let k = toks[4].parse::<u32>().map_err(|_| ParseScalarError(s.to_string()))?;
        Ok(Self::new(int(toks[0])?, int(toks[1])?, int(toks[2])?, int(toks[3])?, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_squared_is_i() {
        let w = ExactScalar::omega(1);
        assert_eq!(w * w, ExactScalar::I);
        assert_eq!(ExactScalar::omega(1) * ExactScalar::omega(7), ExactScalar::ONE);
    }

    #[test]
    fn inverse_root_two_squared() {
        assert_eq!(ExactScalar::INV_SQRT2 * ExactScalar::INV_SQRT2, ExactScalar::HALF);
    }

    #[test]
    fn fifteen_root_two_over_eight_doubled() {
        let x = ExactScalar::new(0, 0, 15, 0, 3);
        assert_eq!(x * ExactScalar::from_int(2), ExactScalar::new(0, 0, 15, 0, 2));
    }

    #[test]
    fn canonical_form_reduces() {
        let x = ExactScalar::new(2, 4, 0, 6, 1);
        assert_eq!(x.parts(), (1, 2, 0, 3, 0));
        assert_eq!(ExactScalar::new(0, 0, 0, 0, 5).parts(), (0, 0, 0, 0, 0));
    }

    #[test]
    fn division() {
        let three = ExactScalar::from_int(3);
        assert_eq!(three.checked_div(&three), Some(ExactScalar::ONE));
        assert_eq!(ExactScalar::ONE.checked_div(&three), None);
        let x = ExactScalar::new(-6, 2, 0, 0, 0);
        let y = ExactScalar::new(1, 1, 0, 0, 1);
        let q = x.checked_div(&y).unwrap();
        assert_eq!(q * y, x);
        assert_eq!(ExactScalar::SQRT2.inv(), Some(ExactScalar::INV_SQRT2));
        let z = ExactScalar::new(1, 0, 1, 0, 0); // 1 + √2, a unit
        assert_eq!(z.inv().unwrap() * z, ExactScalar::ONE);
    }

    #[test]
    fn sqrt2_powers() {
        for n in -7..7 {
            assert_eq!(ExactScalar::sqrt2_pow(n) * ExactScalar::sqrt2_pow(-n), ExactScalar::ONE);
        }
        assert_eq!(ExactScalar::sqrt2_pow(3), ExactScalar::new(0, 0, 2, 0, 0));
    }

    #[test]
    fn display() {
        assert_eq!(ExactScalar::new(1, 3, 0, 0, 1).to_string(), "(1+3i)/2");
        assert_eq!(ExactScalar::new(0, 0, 15, 0, 3).to_string(), "15√2/8");
        assert_eq!(ExactScalar::from_int(-192).to_string(), "-192");
    }

    #[test]
    fn parse_roundtrip() {
        let x = ExactScalar::new(-3, 1, 5, -2, 4);
        let (a, b, c, d, k) = x.parts();
        let s = format!("{a} {b} {c} {d} {k}");
        assert_eq!(s.parse::<ExactScalar>().unwrap(), x);
        assert!("1 2 3".parse::<ExactScalar>().is_err());
    }
}
