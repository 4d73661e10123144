use nalgebra::{Complex, DMatrix, DVector};
use zx_core::ExactScalar;

/// Residual threshold below which a fit counts as exact.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Largest power-of-two denominator tried when snapping.
pub const MAX_K: u32 = 12;

pub(crate) fn to_c64(v: &[ExactScalar]) -> DVector<Complex<f64>> {
    DVector::from_iterator(
        v.len(),
        v.iter().map(|a| {
            let (re, im) = a.to_f64();
            Complex::new(re, im)
        }),
    )
}

/// Least-squares fit of `target` by the columns of `a`; returns the
/// coefficients and the residual norm relative to `|target|`.
pub(crate) fn fit(a: &DMatrix<Complex<f64>>, target: &DVector<Complex<f64>>) -> Option<(DVector<Complex<f64>>, f64)> {
    let svd = a.clone().svd(true, true);
    let x = svd.solve(target, 1e-12).ok()?;
    let r = (a * &x - target).norm() / target.norm().max(f64::MIN_POSITIVE);
    Some((x, r))
}

/// `(a + c√2) / 2^k` closest to `x` with the smallest `k`, if any is within
/// `1e−11·max(1, |x|)`. `|c|` is bounded by `|x|·2^k + 256`; with the tight
/// tolerance, accidental matches of the dense `a + c√2` lattice stay rare,
/// and callers verify exactly anyway.
fn snap_real(x: f64) -> Option<(i64, i64, u32)> {
    let tol = 1e-11 * x.abs().max(1.0);
    for k in 0..=MAX_K {
        let scale = (1u64 << k) as f64;
        let s = x * scale;
        let cmax = s.abs() as i64 + 256;
        for mag in 0..=cmax {
            for c in if mag == 0 { vec![0] } else { vec![mag, -mag] } {
                let a = (s - c as f64 * std::f64::consts::SQRT_2).round();
                if (a + c as f64 * std::f64::consts::SQRT_2 - s).abs() / scale < tol {
                    return Some((a as i64, c, k));
                }
            }
        }
    }
    None
}

/// Exact scalar with denominator at most `2^12` that matches `z` to about
/// eleven digits, preferring small denominators.
pub fn snap(z: Complex<f64>) -> Option<ExactScalar> {
    let (a, c, k1) = snap_real(z.re)?;
    let (b, d, k2) = snap_real(z.im)?;
    let k = k1.max(k2);
    let (s1, s2) = (1i64 << (k - k1), 1i64 << (k - k2));
    Some(ExactScalar::new(a * s1, b * s2, c * s1, d * s2, k))
}

/// Exact coefficients `c` with `Σ cᵢ·statesᵢ = target`: a floating-point
/// least-squares fit, snapped and then checked exactly. `None` when the fit
/// leaves a residual, a coefficient does not snap, or the check fails.
pub fn solve_coefficients(states: &[&[ExactScalar]], target: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
    if states.is_empty() || states.iter().any(|s| s.len() != target.len()) {
        return None;
    }
    let cols: Vec<DVector<Complex<f64>>> = states.iter().map(|s| to_c64(s)).collect();
    let a = DMatrix::from_columns(&cols);
    let (x, r) = fit(&a, &to_c64(target))?;
    if r >= RESIDUAL_TOL {
        return None;
    }
    let coeffs: Vec<ExactScalar> = x.iter().map(|&z| snap(z)).collect::<Option<_>>()?;
    let exact = (0..target.len())
        .all(|i| states.iter().zip(&coeffs).fold(ExactScalar::ZERO, |acc, (s, &c)| acc + c * s[i]) == target[i]);
    exact.then_some(coeffs)
}
