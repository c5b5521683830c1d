//! Operator-method closed forms for the Fröhlich polaron at rest (and its
//! effective mass), valid across the whole coupling range.
//!
//! Everything is expressed in natural units: ħ = c = 1, band mass 1, phonon
//! frequency 1, so energies are in units of the phonon quantum and the mass
//! in units of the band mass. The variational frequency of the oscillator
//! basis is tied to the coupling by ω = 4α²/(9π); the ground-state energy
//! is the diagonal term −α²/(3π) minus the three second-order pieces
//! I1 (gamma-ratio term), I2 (arcsin kernel) and I3 = −α²/(12π).

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::special::gamma_ratio;

/// A coupling strength with its associated oscillator frequency ω = 4α²/(9π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPoint {
    pub alpha: f64,
    pub omega: f64,
}

impl CouplingPoint {
    pub fn new(alpha: f64) -> Result<Self> {
        Ok(CouplingPoint { alpha, omega: omega_of_alpha(alpha)? })
    }
}

/// Ground-state energy split into its closed-form pieces;
/// `total = e0_zeroth − (i1 + i2 + i3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBreakdown {
    pub e0_zeroth: f64,
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub total: f64,
}

/// Effective mass split into the quartic term, the quadratic correction,
/// and their sum `total = 1 + 16α⁴/(81π²) + 2α²/(9π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassBreakdown {
    pub m_zeroth: f64,
    pub m_correction: f64,
    pub total: f64,
}

/// Source of the constant term in the strong-coupling expansion
/// E₀(α) ≈ c₂·α² + c₀.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongConstantTerm {
    /// c₀ = −3 ln 2, obtained by expanding the gamma-ratio term of the
    /// total energy at large α. This is the self-consistent value and the
    /// default used in reports.
    Expansion,
    /// c₀ = −0.75, the constant quoted in the literature for this
    /// expansion. It disagrees with the expansion of the energy formula
    /// itself; carried for reference.
    Literature,
}

impl StrongConstantTerm {
    pub fn value(self) -> f64 {
        match self {
            StrongConstantTerm::Expansion => -3.0 * LN_2,
            StrongConstantTerm::Literature => -0.75,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            StrongConstantTerm::Expansion => "expansion",
            StrongConstantTerm::Literature => "literature",
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::domain(format!("coupling must satisfy alpha >= 0, got {alpha}")));
    }
    Ok(())
}

// 13 + 24 ln 2 − 4π − 12 ln(2+√3) − 1/4, the dimensionless bracket of the
// quadratic strong-coupling term.
fn energy_bracket() -> f64 {
    13.0 + 24.0 * LN_2 - 4.0 * PI - 12.0 * (2.0 + 3.0f64.sqrt()).ln() - 0.25
}

/// Exact quadratic coefficient of the strong-coupling expansion,
/// −(13 + 24 ln 2 − 4π − 12 ln(2+√3) − 1/4)/(3π) ≈ −0.1077656.
pub fn strong_quadratic_coefficient() -> f64 {
    -energy_bracket() / (3.0 * PI)
}

/// Oscillator frequency ω(α) = 4α²/(9π).
pub fn omega_of_alpha(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(4.0 * alpha * alpha / (9.0 * PI))
}

/// Zeroth-order (diagonal) energy −α²/(3π).
pub fn e0_zeroth(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(-alpha * alpha / (3.0 * PI))
}

/// I₁(α) = α√(ω/π)·(√π·Γ(1+1/ω)/Γ(1/2+1/ω) − 1), with I₁(0) = 0 taken by
/// continuity.
pub fn i1_closed(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let omega = omega_of_alpha(alpha)?;
    let ratio = gamma_ratio(1.0 / omega)?;
    Ok(alpha * (omega / PI).sqrt() * (PI.sqrt() * ratio - 1.0))
}

/// I₂(α) = (4α²/π)·(−π/3 + 1 + 2 ln 2 − ln(2+√3)) ≈ 0.0281881·α².
pub fn i2_closed(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(4.0 * alpha * alpha / PI * i2_constant())
}

// −π/3 + 1 + 2 ln 2 − ln(2+√3) ≈ 0.0221389
pub(crate) fn i2_constant() -> f64 {
    -PI / 3.0 + 1.0 + 2.0 * LN_2 - (2.0 + 3.0f64.sqrt()).ln()
}

/// I₃(α) = −α²/(12π).
pub fn i3_closed(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(-alpha * alpha / (12.0 * PI))
}

/// Ground-state energy with its full breakdown.
///
/// The total is evaluated from the rearranged closed form
/// −(α²/(3π))·(13 + 24 ln 2 − 4π − 12 ln(2+√3) − 1/4) + α√(ω/π)(1 − √π·Γratio),
/// which the breakdown identity `total = e0_zeroth − (i1+i2+i3)` cross-checks
/// to machine precision.
pub fn ground_state_energy(alpha: f64) -> Result<EnergyBreakdown> {
    check_alpha(alpha)?;
    if alpha == 0.0 {
        return Ok(EnergyBreakdown { e0_zeroth: 0.0, i1: 0.0, i2: 0.0, i3: 0.0, total: 0.0 });
    }
    let omega = omega_of_alpha(alpha)?;
    let ratio = gamma_ratio(1.0 / omega)?;
    let total = -alpha * alpha / (3.0 * PI) * energy_bracket()
        + alpha * (omega / PI).sqrt() * (1.0 - PI.sqrt() * ratio);
    Ok(EnergyBreakdown {
        e0_zeroth: e0_zeroth(alpha)?,
        i1: i1_closed(alpha)?,
        i2: i2_closed(alpha)?,
        i3: i3_closed(alpha)?,
        total,
    })
}

/// Weak-coupling expansion E₀(α) ≈ −α + 0.1044·α².
pub fn weak_asymptote(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(-alpha + 0.1044 * alpha * alpha)
}

/// Strong-coupling expansion with the default (expansion-consistent)
/// constant term: E₀(α) ≈ −0.1077656·α² − 3 ln 2.
pub fn strong_asymptote(alpha: f64) -> Result<f64> {
    strong_asymptote_with(alpha, StrongConstantTerm::Expansion)
}

/// Strong-coupling expansion with an explicit choice of constant term.
pub fn strong_asymptote_with(alpha: f64, constant: StrongConstantTerm) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(strong_quadratic_coefficient() * alpha * alpha + constant.value())
}

/// Effective mass m_p(α) = 1 + 16α⁴/(81π²) + 2α²/(9π).
pub fn effective_mass(alpha: f64) -> Result<MassBreakdown> {
    check_alpha(alpha)?;
    let a2 = alpha * alpha;
    let m_zeroth = 1.0 + 16.0 * a2 * a2 / (81.0 * PI * PI);
    let m_correction = 2.0 * a2 / (9.0 * PI);
    Ok(MassBreakdown { m_zeroth, m_correction, total: m_zeroth + m_correction })
}
