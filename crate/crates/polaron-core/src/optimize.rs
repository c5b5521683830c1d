//! Derivative-free simplex minimization (Nelder–Mead) for smooth
//! low-dimensional objectives.
//!
//! Deterministic by construction: vertex ordering breaks ties by insertion
//! index (stable sort), and restarts rebuild the simplex around the best
//! point with fixed axis steps rather than random perturbations.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeOptions {
    pub initial_point: Vec<f64>,
    /// Step used both for the initial simplex and for restart simplices.
    pub initial_scale: f64,
    /// Convergence threshold on the simplex function-value spread.
    pub f_tol: f64,
    /// Convergence threshold on the simplex diameter (max-norm).
    pub x_tol: f64,
    pub max_iterations: usize,
    /// Additional deterministic restarts from the best point found.
    pub restarts: usize,
}

impl MinimizeOptions {
    pub fn from_point(initial_point: Vec<f64>) -> Self {
        MinimizeOptions { initial_point, ..Default::default() }
    }
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            initial_point: Vec::new(),
            initial_scale: 0.5,
            f_tol: 1e-12,
            x_tol: 1e-9,
            max_iterations: 500,
            restarts: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizeResult {
    pub x_min: Vec<f64>,
    pub f_min: f64,
    pub iterations: usize,
    pub converged: bool,
}

// Reflection, expansion, contraction, shrink.
const ALPHA: f64 = 1.0;
const GAMMA: f64 = 2.0;
const RHO: f64 = 0.5;
const SIGMA: f64 = 0.5;

struct Vertex {
    x: Vec<f64>,
    f: f64,
}

// Non-finite objective values sort last so the simplex retreats from them.
fn order_value(f: f64) -> f64 {
    if f.is_finite() {
        f
    } else {
        f64::INFINITY
    }
}

fn run_simplex<F: Fn(&[f64]) -> f64>(
    f: &F,
    start: &[f64],
    opts: &MinimizeOptions,
) -> (Vec<f64>, f64, usize, bool) {
    let n = start.len();
    let mut simplex: Vec<Vertex> = Vec::with_capacity(n + 1);
    simplex.push(Vertex { x: start.to_vec(), f: order_value(f(start)) });
    for i in 0..n {
        let mut x = start.to_vec();
        x[i] += opts.initial_scale;
        simplex.push(Vertex { x: x.clone(), f: order_value(f(&x)) });
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iterations {
        iterations += 1;
        // Stable sort == lexicographic (f value, vertex index) tie-breaking.
        simplex.sort_by(|a, b| a.f.total_cmp(&b.f));

        let spread = simplex[n].f - simplex[0].f;
        let diameter = simplex[1..]
            .iter()
            .map(|v| {
                v.x.iter()
                    .zip(&simplex[0].x)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max)
            })
            .fold(0.0f64, f64::max);
        if spread.abs() <= opts.f_tol && diameter <= opts.x_tol {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|v| v.x[j]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].x.clone();
        let blend = |coef: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + coef * (c - w))
                .collect()
        };

        let reflected = blend(ALPHA);
        let f_reflected = order_value(f(&reflected));
        if f_reflected < simplex[0].f {
            let expanded = blend(GAMMA);
            let f_expanded = order_value(f(&expanded));
            if f_expanded < f_reflected {
                simplex[n] = Vertex { x: expanded, f: f_expanded };
            } else {
                simplex[n] = Vertex { x: reflected, f: f_reflected };
            }
        } else if f_reflected < simplex[n - 1].f {
            simplex[n] = Vertex { x: reflected, f: f_reflected };
        } else {
            // Contract toward the better of worst/reflected.
            let contracted = if f_reflected < simplex[n].f { blend(RHO) } else { blend(-RHO) };
            let f_contracted = order_value(f(&contracted));
            if f_contracted < simplex[n].f.min(f_reflected) {
                simplex[n] = Vertex { x: contracted, f: f_contracted };
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].x.clone();
                for v in simplex.iter_mut().skip(1) {
                    for (xj, bj) in v.x.iter_mut().zip(&best) {
                        *xj = bj + SIGMA * (*xj - bj);
                    }
                    v.f = order_value(f(&v.x));
                }
            }
        }
    }

    simplex.sort_by(|a, b| a.f.total_cmp(&b.f));
    let best = simplex.swap_remove(0);
    (best.x, best.f, iterations, converged)
}

/// Minimizes f starting from `opts.initial_point`.
///
/// Returns the best point over the initial run plus `opts.restarts`
/// deterministic restarts; `converged` reflects the run that produced it.
pub fn minimize<F: Fn(&[f64]) -> f64>(f: F, opts: &MinimizeOptions) -> Result<MinimizeResult> {
    let n = opts.initial_point.len();
    if n == 0 || n > 4 {
        return Err(Error::domain(format!("minimize supports dimensions 1..=4, got {n}")));
    }
    if !(opts.initial_scale > 0.0) || !(opts.f_tol > 0.0) || !(opts.x_tol > 0.0) {
        return Err(Error::config("initial_scale, f_tol and x_tol must be positive"));
    }
    if opts.max_iterations == 0 {
        return Err(Error::config("max_iterations must be positive"));
    }
    if !opts.initial_point.iter().all(|v| v.is_finite()) {
        return Err(Error::domain("initial_point must be finite"));
    }
    if !f(&opts.initial_point).is_finite() {
        return Err(Error::domain("objective is not finite at initial_point"));
    }

    let (mut x_best, mut f_best, mut total_iterations, mut converged) =
        run_simplex(&f, &opts.initial_point, opts);
    for _ in 0..opts.restarts {
        let (x, fx, iters, conv) = run_simplex(&f, &x_best, opts);
        total_iterations += iters;
        if fx < f_best {
            x_best = x;
            f_best = fx;
            converged = conv;
        } else if conv && fx == f_best {
            converged = true;
        }
    }
    Ok(MinimizeResult { x_min: x_best, f_min: f_best, iterations: total_iterations, converged })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| (x[0] - 2.0).powi(2) + (x[1] + 1.0).powi(2);
        let r = minimize(f, &MinimizeOptions::from_point(vec![0.0, 0.0])).unwrap();
        assert!(r.converged);
        assert!((r.x_min[0] - 2.0).abs() < 1e-6);
        assert!((r.x_min[1] + 1.0).abs() < 1e-6);
        assert!(r.f_min < 1e-12);
    }

    #[test]
    fn one_dimensional() {
        let r = minimize(|x| x[0] * x[0], &MinimizeOptions::from_point(vec![5.0])).unwrap();
        assert!(r.x_min[0].abs() < 1e-6);
    }

    #[test]
    fn rosenbrock_with_restarts() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let opts = MinimizeOptions {
            initial_point: vec![-1.2, 1.0],
            max_iterations: 2000,
            restarts: 2,
            ..Default::default()
        };
        let r = minimize(f, &opts).unwrap();
        assert!(r.f_min <= 1e-8, "f_min = {}", r.f_min);
        assert!((r.x_min[0] - 1.0).abs() < 1e-3);
    }

    #[test]
    fn exhausted_iterations_keep_best_point() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let opts = MinimizeOptions {
            initial_point: vec![-1.2, 1.0],
            max_iterations: 3,
            restarts: 0,
            ..Default::default()
        };
        let r = minimize(f, &opts).unwrap();
        assert!(!r.converged);
        assert!(r.f_min.is_finite());
    }

    #[test]
    fn deterministic() {
        let f = |x: &[f64]| x[0].sin() + (x[1] - 0.3).powi(2);
        let opts = MinimizeOptions::from_point(vec![1.0, 1.0]);
        let r1 = minimize(f, &opts).unwrap();
        let r2 = minimize(f, &opts).unwrap();
        assert_eq!(r1.f_min.to_bits(), r2.f_min.to_bits());
        assert_eq!(r1.x_min[0].to_bits(), r2.x_min[0].to_bits());
        assert_eq!(r1.iterations, r2.iterations);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(minimize(|_| 0.0, &MinimizeOptions::from_point(vec![])).is_err());
        assert!(minimize(|_| 0.0, &MinimizeOptions::from_point(vec![0.0; 5])).is_err());
        assert!(minimize(|_| f64::NAN, &MinimizeOptions::from_point(vec![0.0])).is_err());
        let bad = MinimizeOptions { f_tol: 0.0, ..MinimizeOptions::from_point(vec![0.0]) };
        assert!(minimize(|x| x[0] * x[0], &bad).is_err());
    }
}
