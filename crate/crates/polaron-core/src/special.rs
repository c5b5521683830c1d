//! Gamma-function kernels: `log_gamma` and the ratio Γ(1+z)/Γ(1/2+z).
//!
//! The ratio is the only special function the energy formula needs. Its
//! argument z = 1/ω ranges from ~1e-9 up to ~1e9 across the coupling range,
//! so it is evaluated from a single Lanczos expression with the two
//! log-gamma terms combined algebraically; subtracting two independently
//! rounded `log_gamma` values would lose ~6 digits near z = 1e9.

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, 9 terms (the familiar GSL coefficient set).
// Relative error of the reconstructed gamma is a few 1e-15 over x > 0.5.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

fn lanczos_sum(x: f64) -> f64 {
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x - 1.0 + i as f64);
    }
    acc
}

// ln Γ(x) for x ≥ 0.5.
fn log_gamma_direct(x: f64) -> f64 {
    let t = x + (LANCZOS_G - 0.5);
    LN_SQRT_2PI + lanczos_sum(x).ln() + (x - 0.5) * t.ln() - t
}

/// Natural log of the gamma function on the positive half-line.
///
/// Relative error stays below ~1e-13 on [1e-6, 1e9]; the integer zeros
/// Γ(1) = Γ(2) = 1 are returned exactly.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x < 0.5 {
        // Γ(x) = Γ(x+1)/x keeps the Lanczos argument away from 0.
        return Ok(log_gamma_direct(x + 1.0) - x.ln());
    }
    Ok(log_gamma_direct(x))
}

/// Γ(1+z)/Γ(1/2+z) for z > 0.
///
/// Both Lanczos factorizations share the shifted base t = z + g, so the
/// ratio reduces to √(t+1/2) · exp(z·ln(1 + 1/(2t)) − 1/2) times a ratio of
/// two slowly varying rational sums. No overflowing intermediate appears for
/// any representable z, and the relative error stays below ~1e-13.
pub fn gamma_ratio(z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain(format!("gamma_ratio requires z > 0, got {z}")));
    }
    let t2 = z + LANCZOS_G; // base for Γ(1/2+z)
    let t1 = t2 + 0.5; // base for Γ(1+z)
    let exponent = z * (0.5 / t2).ln_1p() - 0.5;
    Ok(t1.sqrt() * exponent.exp() * (lanczos_sum(z + 1.0) / lanczos_sum(z + 0.5)))
}
