//! Coupling-grid scans comparing the closed-form results against the
//! Feynman baseline.

use std::path::PathBuf;

use polaron_core::{
    effective_mass, feynman_minimize, ground_state_energy, MinimizeOptions, Tolerance,
};
use serde::Serialize;

/// One grid point of a comparison scan. Failed fields carry NaN, which
/// renders as an empty CSV cell / JSON null.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub alpha: f64,
    pub e_om: f64,
    pub e_feynman: f64,
    pub rel_diff_e: f64,
    pub m_om: f64,
    pub m_feynman: f64,
    pub rel_diff_m: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Logarithmic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotSeries {
    Energy,
    Mass,
    RelDiff,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub tolerance: Tolerance,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub plot_path: Option<PathBuf>,
    pub plot_series: PlotSeries,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            alpha_min: 0.1,
            alpha_max: 20.0,
            points: 51,
            spacing: Spacing::Linear,
            tolerance: Tolerance::default(),
            output_format: OutputFormat::Csv,
            output_path: None,
            plot_path: None,
            plot_series: PlotSeries::Energy,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !self.alpha_min.is_finite() || !self.alpha_max.is_finite() {
            return Err("alpha bounds must be finite".into());
        }
        if self.alpha_min <= 0.0 || self.alpha_max <= 0.0 {
            return Err("alpha bounds must be positive".into());
        }
        if self.alpha_min >= self.alpha_max {
            return Err(format!(
                "alpha_min must be below alpha_max, got {} >= {}",
                self.alpha_min, self.alpha_max
            ));
        }
        if self.points < 2 {
            return Err("a scan needs at least 2 points".into());
        }
        self.tolerance.validate().map_err(|e| e.to_string())
    }

    /// The coupling grid; endpoints land exactly on the configured bounds.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.points;
        let mut grid = Vec::with_capacity(n);
        for i in 0..n {
            let frac = i as f64 / (n - 1) as f64;
            let alpha = match self.spacing {
                Spacing::Linear => self.alpha_min + frac * (self.alpha_max - self.alpha_min),
                Spacing::Logarithmic => {
                    (self.alpha_min.ln() + frac * (self.alpha_max.ln() - self.alpha_min.ln())).exp()
                }
            };
            grid.push(alpha);
        }
        grid[0] = self.alpha_min;
        grid[n - 1] = self.alpha_max;
        grid
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    /// Number of rows with at least one failed field.
    pub failures: usize,
}

/// Runs the scan; per-point failures are recorded as NaN fields rather
/// than aborting the whole grid.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanOutcome, String> {
    cfg.validate()?;
    let opts = MinimizeOptions::default();
    let mut rows = Vec::with_capacity(cfg.points);
    let mut failures = 0usize;
    for alpha in cfg.grid() {
        let om = ground_state_energy(alpha)
            .and_then(|e| effective_mass(alpha).map(|m| (e.total, m.total)));
        let (e_om, m_om) = match om {
            Ok(pair) => pair,
            Err(e) => {
                log::warn!("closed forms failed at alpha={alpha}: {e}");
                failures += 1;
                (f64::NAN, f64::NAN)
            }
        };
        let (e_f, m_f) = match feynman_minimize(alpha, &opts, &cfg.tolerance) {
            Ok(r) => (r.energy, r.mass),
            Err(e) => {
                log::warn!("baseline failed at alpha={alpha}: {e}");
                failures += 1;
                (f64::NAN, f64::NAN)
            }
        };
        let rel_diff_e = (e_om - e_f).abs() / e_f.abs();
        let rel_diff_m = (m_om - m_f).abs() / m_f.abs();
        log::debug!("alpha={alpha}: e_om={e_om} e_feynman={e_f} rel_diff_e={rel_diff_e}");
        rows.push(ScanRow { alpha, e_om, e_feynman: e_f, rel_diff_e, m_om, m_feynman: m_f, rel_diff_m });
    }
    Ok(ScanOutcome { rows, failures })
}
