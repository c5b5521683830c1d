//! Quadrature cross-checks of every closed form in [`crate::om`].
//!
//! Each closed-form energy piece came from an integral that can also be
//! evaluated numerically. This module integrates those representations
//! directly and reports the disagreement, which is the crate's primary
//! defense against an algebra slip in the closed forms.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::om;
use crate::quadrature::{
    integrate_finite, integrate_semi_infinite_scaled, QuadratureResult, Tolerance,
};

/// Quantity checked by one oracle comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleQuantity {
    I1,
    I2,
    I3,
    /// Combined second-order correction I1 + I2 + I3 as a single integral.
    SecondOrder,
    /// Total ground-state energy assembled from the numeric second order.
    TotalEnergy,
}

impl OracleQuantity {
    pub const ALL: [OracleQuantity; 5] = [
        OracleQuantity::I1,
        OracleQuantity::I2,
        OracleQuantity::I3,
        OracleQuantity::SecondOrder,
        OracleQuantity::TotalEnergy,
    ];

    /// Relative-difference threshold this quantity must meet.
    pub fn threshold(self) -> f64 {
        match self {
            OracleQuantity::I1 | OracleQuantity::I2 | OracleQuantity::I3 => 1e-8,
            OracleQuantity::SecondOrder | OracleQuantity::TotalEnergy => 1e-7,
        }
    }
}

impl std::fmt::Display for OracleQuantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            OracleQuantity::I1 => "I1",
            OracleQuantity::I2 => "I2",
            OracleQuantity::I3 => "I3",
            OracleQuantity::SecondOrder => "E2",
            OracleQuantity::TotalEnergy => "E0",
        };
        f.write_str(name)
    }
}

/// Outcome of one closed-form/quadrature comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub quantity: OracleQuantity,
    pub alpha: f64,
    pub closed_value: f64,
    pub numeric_value: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub quad: QuadratureResult,
    /// Set when the numeric evaluation failed; the comparison then counts
    /// as failed regardless of the recorded values.
    pub failure: Option<String>,
}

impl OracleReport {
    pub fn passes(&self) -> bool {
        self.failure.is_none() && self.rel_diff <= self.quantity.threshold()
    }
}

fn check_positive_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::domain(format!("oracle requires alpha > 0, got {alpha}")));
    }
    Ok(())
}

// s^{−1/2} − 1 without cancellation for s near 1, via the identity
// (1 − √s)/√s = (1 − s)/(√s·(1 + √s)); the caller supplies 1 − s exactly.
fn inv_sqrt_minus_one(s: f64, one_minus_s: f64) -> f64 {
    let root = s.sqrt();
    one_minus_s / (root * (1.0 + root))
}

/// I₁ by direct quadrature of α√(ω/π)·∫₀^∞ e^{−x}[(1−e^{−ωx})^{−1/2} − 1] dx.
///
/// The integrand carries an x^{−1/2} singularity at the origin and decays
/// like e^{−(1+ω)x}, which fixes the transform scale.
pub fn i1_numeric(alpha: f64, tol: &Tolerance) -> Result<QuadratureResult> {
    check_positive_alpha(alpha)?;
    let omega = om::omega_of_alpha(alpha)?;
    let prefactor = alpha * (omega / PI).sqrt();
    let integrand = move |x: f64| {
        let s = -(-omega * x).exp_m1(); // 1 − e^{−ωx}
        let one_minus_s = (-omega * x).exp();
        (-x).exp() * inv_sqrt_minus_one(s, one_minus_s)
    };
    let quad = integrate_semi_infinite_scaled(integrand, 0.0, 1.0 + omega, tol)?;
    Ok(quad.scaled(prefactor))
}

// (2 asin(t/2) − t)/t², the removable-singularity kernel of I₂. The direct
// expression loses all digits below t ≈ 1e-8, so small t switches to the
// series t/24 + 3t³/640 + 5t⁵/7168 + 35t⁷/294912 (next term < 1e-19 of the
// leading one at the crossover).
fn asin_kernel(t: f64) -> f64 {
    if t < 1e-2 {
        let t2 = t * t;
        t / 24.0 + 3.0 * t * t2 / 640.0 + 5.0 * t * t2 * t2 / 7168.0 + 35.0 * t * t2 * t2 * t2 / 294_912.0
    } else {
        (2.0 * (0.5 * t).asin() - t) / (t * t)
    }
}

/// I₂ by quadrature of (4α²/π)·∫₀¹ [2 asin(t/2)/t² − 1/t] dt, the form the
/// x-integral takes after the substitution t = e^{−ωx}.
pub fn i2_numeric(alpha: f64, tol: &Tolerance) -> Result<QuadratureResult> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::domain(format!("oracle requires alpha >= 0, got {alpha}")));
    }
    let quad = integrate_finite(asin_kernel, 0.0, 1.0, tol)?;
    Ok(quad.scaled(4.0 * alpha * alpha / PI))
}

/// I₃ by quadrature of −(α²/(6π))·ω·∫₀^∞ e^{−2ωx} dx.
pub fn i3_numeric(alpha: f64, tol: &Tolerance) -> Result<QuadratureResult> {
    check_positive_alpha(alpha)?;
    let omega = om::omega_of_alpha(alpha)?;
    let integrand = move |x: f64| (-2.0 * omega * x).exp();
    let quad = integrate_semi_infinite_scaled(integrand, 0.0, 2.0 * omega, tol)?;
    Ok(quad.scaled(-alpha * alpha * omega / (6.0 * PI)))
}

/// The full second-order correction I₁+I₂+I₃ as one quadrature of the
/// summed integrand.
///
/// The sum is integrated in the variable u = 1 − e^{−ωx}, which places the
/// u^{−1/2} singularity of the I₁ piece at the origin where it is resolved
/// exactly; the prefactor of that piece collapses to α/√(πω) = 3/2 for the
/// coupled frequency.
pub fn second_order_numeric(alpha: f64, tol: &Tolerance) -> Result<QuadratureResult> {
    check_positive_alpha(alpha)?;
    let omega = om::omega_of_alpha(alpha)?;
    let inv_omega = 1.0 / omega;
    let c2 = 4.0 * alpha * alpha / PI;
    let c3 = alpha * alpha / (6.0 * PI);
    let integrand = move |u: f64| {
        let root = u.sqrt();
        // e^{−x} = (1−u)^{1/ω}, kept in log form for tiny u.
        let decay = (inv_omega * (-u).ln_1p()).exp();
        let t = 1.0 - u; // = e^{−ωx}
        1.5 * decay / (root * (1.0 + root)) + c2 * asin_kernel(t) - c3 * t
    };
    integrate_finite(integrand, 0.0, 1.0, tol)
}

/// Runs every oracle comparison for each coupling in `alpha_grid`.
///
/// Reports are ordered quantity-major, then by the grid order. A failed
/// numeric evaluation is recorded in its report instead of aborting the
/// whole batch.
pub fn verify_all(alpha_grid: &[f64], tol: &Tolerance) -> Result<Vec<OracleReport>> {
    if alpha_grid.is_empty() {
        return Err(Error::domain("verify_all requires a nonempty coupling grid"));
    }
    for &alpha in alpha_grid {
        check_positive_alpha(alpha)?;
    }

    let mut reports = Vec::with_capacity(OracleQuantity::ALL.len() * alpha_grid.len());
    for quantity in OracleQuantity::ALL {
        for &alpha in alpha_grid {
            reports.push(run_one(quantity, alpha, tol));
        }
    }
    Ok(reports)
}

fn run_one(quantity: OracleQuantity, alpha: f64, tol: &Tolerance) -> OracleReport {
    let closed = closed_value(quantity, alpha);
    let numeric = numeric_value(quantity, alpha, tol);
    match numeric {
        Ok(quad) => report(quantity, alpha, closed, quad, None),
        Err(Error::QuadratureConvergence { best }) => report(
            quantity,
            alpha,
            closed,
            best,
            Some("quadrature did not reach the requested tolerance".into()),
        ),
        Err(e) => report(
            quantity,
            alpha,
            closed,
            QuadratureResult { value: f64::NAN, abs_err: 0.0, evaluations: 1 },
            Some(e.to_string()),
        ),
    }
}

fn report(
    quantity: OracleQuantity,
    alpha: f64,
    closed_value: f64,
    quad: QuadratureResult,
    failure: Option<String>,
) -> OracleReport {
    let numeric_value = quad.value;
    let abs_diff = (closed_value - numeric_value).abs();
    let rel_diff = abs_diff / closed_value.abs().max(1e-300);
    OracleReport { quantity, alpha, closed_value, numeric_value, abs_diff, rel_diff, quad, failure }
}

fn closed_value(quantity: OracleQuantity, alpha: f64) -> f64 {
    match quantity {
        OracleQuantity::I1 => om::i1_closed(alpha),
        OracleQuantity::I2 => om::i2_closed(alpha),
        OracleQuantity::I3 => om::i3_closed(alpha),
        OracleQuantity::SecondOrder => om::ground_state_energy(alpha)
            .map(|e| e.i1 + e.i2 + e.i3),
        OracleQuantity::TotalEnergy => om::ground_state_energy(alpha).map(|e| e.total),
    }
    .expect("alpha validated by caller")
}

fn numeric_value(quantity: OracleQuantity, alpha: f64, tol: &Tolerance) -> Result<QuadratureResult> {
    match quantity {
        OracleQuantity::I1 => i1_numeric(alpha, tol),
        OracleQuantity::I2 => i2_numeric(alpha, tol),
        OracleQuantity::I3 => i3_numeric(alpha, tol),
        OracleQuantity::SecondOrder => second_order_numeric(alpha, tol),
        OracleQuantity::TotalEnergy => {
            let second = second_order_numeric(alpha, tol)?;
            Ok(second.scaled(-1.0).shifted(om::e0_zeroth(alpha)?))
        }
    }
}
