//! Plain `key = value` config files mirroring the scan settings.
//!
//! Lines starting with `#` and blank lines are ignored. Command-line flags
//! override anything read from a file.

use std::path::PathBuf;

use crate::scan::{OutputFormat, PlotSeries, ScanConfig, Spacing};

#[derive(Debug, Default, Clone, PartialEq)]
pub struct FileConfig {
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub points: Option<usize>,
    pub spacing: Option<Spacing>,
    pub format: Option<OutputFormat>,
    pub output: Option<PathBuf>,
    pub plot: Option<PathBuf>,
    pub series: Option<PlotSeries>,
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_evaluations: Option<usize>,
}

pub fn parse_spacing(s: &str) -> Result<Spacing, String> {
    match s {
        "linear" => Ok(Spacing::Linear),
        "logarithmic" => Ok(Spacing::Logarithmic),
        other => Err(format!("unknown spacing '{other}' (expected linear|logarithmic)")),
    }
}

pub fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(format!("unknown format '{other}' (expected csv|json)")),
    }
}

pub fn parse_series(s: &str) -> Result<PlotSeries, String> {
    match s {
        "energy" => Ok(PlotSeries::Energy),
        "mass" => Ok(PlotSeries::Mass),
        "rel_diff" | "rel-diff" => Ok(PlotSeries::RelDiff),
        other => Err(format!("unknown series '{other}' (expected energy|mass|rel_diff)")),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str, line: usize) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e| format!("line {line}: {key}: {e}"))
}

pub fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected 'key = value', got '{raw}'", i + 1))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "alpha_min" => cfg.alpha_min = Some(parse_num(key, value, i + 1)?),
            "alpha_max" => cfg.alpha_max = Some(parse_num(key, value, i + 1)?),
            "points" => cfg.points = Some(parse_num(key, value, i + 1)?),
            "spacing" => cfg.spacing = Some(parse_spacing(value)?),
            "format" => cfg.format = Some(parse_format(value)?),
            "output" => cfg.output = Some(PathBuf::from(value)),
            "plot" => cfg.plot = Some(PathBuf::from(value)),
            "series" => cfg.series = Some(parse_series(value)?),
            "abs_tol" => cfg.abs_tol = Some(parse_num(key, value, i + 1)?),
            "rel_tol" => cfg.rel_tol = Some(parse_num(key, value, i + 1)?),
            "max_evaluations" => cfg.max_evaluations = Some(parse_num(key, value, i + 1)?),
            other => return Err(format!("line {}: unknown key '{other}'", i + 1)),
        }
    }
    Ok(cfg)
}

impl FileConfig {
    /// Applies the file values on top of `base` (file wins over defaults).
    pub fn apply(&self, base: &mut ScanConfig) {
        if let Some(v) = self.alpha_min {
            base.alpha_min = v;
        }
        if let Some(v) = self.alpha_max {
            base.alpha_max = v;
        }
        if let Some(v) = self.points {
            base.points = v;
        }
        if let Some(v) = self.spacing {
            base.spacing = v;
        }
        if let Some(v) = self.format {
            base.output_format = v;
        }
        if let Some(v) = &self.output {
            base.output_path = Some(v.clone());
        }
        if let Some(v) = &self.plot {
            base.plot_path = Some(v.clone());
        }
        if let Some(v) = self.series {
            base.plot_series = v;
        }
        if let Some(v) = self.abs_tol {
            base.tolerance.abs_tol = v;
        }
        if let Some(v) = self.rel_tol {
            base.tolerance.rel_tol = v;
        }
        if let Some(v) = self.max_evaluations {
            base.tolerance.max_evaluations = v;
        }
    }
}
