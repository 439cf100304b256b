//! Floating-point simultaneous root finder (Aberth–Ehrlich).
//!
//! Only used to *propose* quadratic factors; every proposal is verified by
//! exact division before it is accepted.

use num_complex::Complex64;

const MAX_ITERATIONS: usize = 500;

/// Evaluates the polynomial and its derivative at `z` (coefficients lowest degree first).
fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Upper bound on root moduli (Cauchy).
fn cauchy_bound(coeffs: &[f64]) -> f64 {
    let lead = *coeffs.last().unwrap();
    1.0 + coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(0.0, f64::max)
}

/// All complex roots of a polynomial with real coefficients, lowest degree first.
///
/// `rotation` perturbs the initial guesses so a retry starts from a different
/// configuration.
pub fn aberth(coeffs: &[f64], tolerance: f64, rotation: f64) -> Vec<Complex64> {
    let degree = coeffs.len().saturating_sub(1);
    if degree == 0 {
        return Vec::new();
    }
    let radius = cauchy_bound(coeffs) * 0.5;
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (degree as f64) + 0.4 + rotation;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for k in 0..degree {
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..degree).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < tolerance {
            break;
        }
    }

    // Newton polish.
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(coeffs, *zk);
            let step = p / dp;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    z
}
