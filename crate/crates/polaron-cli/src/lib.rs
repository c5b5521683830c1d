//! Report generation for the polaron energy/mass comparison: coupling
//! scans, CSV/JSON emission, and static SVG plots. The `polaron` binary is
//! a thin wrapper over this crate.

pub mod config;
pub mod output;
pub mod scan;
pub mod svg;

pub use config::{parse_config, FileConfig};
pub use output::{emit_csv, emit_json, format_value, parse_csv, CSV_HEADER};
pub use scan::{run_scan, OutputFormat, PlotSeries, ScanConfig, ScanOutcome, ScanRow, Spacing};
pub use svg::emit_svg_plot;
