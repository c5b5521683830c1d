//! `polaron` — Fröhlich polaron ground-state energy and effective mass.
//!
//! Exit codes: 0 success, 1 computation failure (including failed
//! verification or failed scan rows), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use polaron_cli::config::{parse_config, parse_format, parse_series};
use polaron_cli::output::format_value as fmt;
use polaron_cli::{emit_csv, emit_json, emit_svg_plot, run_scan, OutputFormat, ScanConfig, Spacing};
use polaron_core::{
    effective_mass, feynman_minimize_default, ground_state_energy, omega_of_alpha,
    strong_quadratic_coefficient, verify_all, CouplingPoint, StrongConstantTerm, Tolerance,
};

#[derive(Parser)]
#[command(
    name = "polaron",
    about = "Fröhlich polaron ground-state energy and effective mass, with quadrature \
             verification and a Feynman variational baseline",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ground-state energy E0(alpha), optionally with its term breakdown.
    Energy {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Also print omega and the I1/I2/I3 decomposition.
        #[arg(long)]
        breakdown: bool,
    },
    /// Effective-mass breakdown at one coupling.
    Mass {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Minimized Feynman baseline (v, w, energy, mass) at one coupling.
    Feynman {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
    },
    /// Check every closed form against its quadrature oracle.
    Verify {
        /// Comma-separated couplings (default: 0.1,0.5,1,2,5,10,20,50).
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<f64>>,
    },
    /// Scan a coupling grid and emit CSV/JSON rows and optional SVG plots.
    Scan(ScanArgs),
    /// Print the weak- and strong-coupling expansion coefficients.
    Asymptotes,
}

#[derive(Args)]
struct ScanArgs {
    /// Optional `key = value` config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    alpha_min: Option<f64>,
    #[arg(long)]
    alpha_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Logarithmic grid spacing (default linear).
    #[arg(long)]
    log: bool,
    /// Row format: csv or json.
    #[arg(long, value_parser = parse_format_arg)]
    format: Option<OutputFormat>,
    /// Write rows to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write an SVG plot to this file.
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Plot series: energy, mass, or rel_diff.
    #[arg(long, value_parser = parse_series_arg)]
    series: Option<polaron_cli::PlotSeries>,
}

fn parse_format_arg(s: &str) -> Result<OutputFormat, String> {
    parse_format(s)
}

fn parse_series_arg(s: &str) -> Result<polaron_cli::PlotSeries, String> {
    parse_series(s)
}

fn main() {
    let _ = env_logger::Builder::from_env(
        env_logger::Env::new().filter_or("POLARON_LOG", "error"),
    )
    .try_init();
    std::process::exit(dispatch(std::env::args().collect()));
}

/// Parses argv and runs the selected subcommand, returning the process
/// exit code.
pub fn dispatch(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap distinguishes --help/--version (success) from usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Energy { alpha, breakdown } => cmd_energy(alpha, breakdown),
        Command::Mass { alpha } => cmd_mass(alpha),
        Command::Feynman { alpha } => cmd_feynman(alpha),
        Command::Verify { grid } => cmd_verify(grid),
        Command::Scan(args) => cmd_scan(args),
        Command::Asymptotes => cmd_asymptotes(),
    }
}

fn cmd_energy(alpha: f64, breakdown: bool) -> Result<i32> {
    let e = ground_state_energy(alpha)?;
    if breakdown {
        let point = CouplingPoint::new(alpha)?;
        println!("alpha      {}", fmt(point.alpha));
        println!("omega      {}", fmt(point.omega));
        println!("e0_zeroth  {}", fmt(e.e0_zeroth));
        println!("i1         {}", fmt(e.i1));
        println!("i2         {}", fmt(e.i2));
        println!("i3         {}", fmt(e.i3));
        println!("total      {}", fmt(e.total));
    } else {
        println!("{}", fmt(e.total));
    }
    Ok(0)
}

fn cmd_mass(alpha: f64) -> Result<i32> {
    let m = effective_mass(alpha)?;
    println!("alpha         {}", fmt(alpha));
    println!("omega         {}", fmt(omega_of_alpha(alpha)?));
    println!("m_zeroth      {}", fmt(m.m_zeroth));
    println!("m_correction  {}", fmt(m.m_correction));
    println!("total         {}", fmt(m.total));
    Ok(0)
}

fn cmd_feynman(alpha: f64) -> Result<i32> {
    let r = feynman_minimize_default(alpha)?;
    println!("alpha      {}", fmt(alpha));
    println!("v          {}", fmt(r.params.v()));
    println!("w          {}", fmt(r.params.w()));
    println!("energy     {}", fmt(r.energy));
    println!("mass       {}", fmt(r.mass));
    println!("converged  {}", r.converged);
    Ok(if r.converged { 0 } else { 1 })
}

fn cmd_verify(grid: Option<Vec<f64>>) -> Result<i32> {
    let grid = grid.unwrap_or_else(|| vec![0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0]);
    let reports = verify_all(&grid, &Tolerance::default())?;
    let mut failed = 0usize;
    for r in &reports {
        let status = if r.passes() { "PASS" } else { "FAIL" };
        if !r.passes() {
            failed += 1;
        }
        print!(
            "{status} {:<2} alpha={} closed={} numeric={} rel_diff={:.3e} evals={}",
            r.quantity.to_string(),
            fmt(r.alpha),
            fmt(r.closed_value),
            fmt(r.numeric_value),
            r.rel_diff,
            r.quad.evaluations
        );
        match &r.failure {
            Some(msg) => println!(" ({msg})"),
            None => println!(),
        }
    }
    println!("verify: {}/{} comparisons passed", reports.len() - failed, reports.len());
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_asymptotes() -> Result<i32> {
    println!("weak coupling:   E0(alpha) ~ -alpha + 0.1044 alpha^2");
    println!("strong coupling: E0(alpha) ~ c2 alpha^2 + c0");
    println!("c2 exact         {}", fmt(strong_quadratic_coefficient()));
    for c in [StrongConstantTerm::Expansion, StrongConstantTerm::Literature] {
        println!("c0 {:<12}  {}", c.label(), fmt(c.value()));
    }
    println!("default c0: {} (consistent with the energy formula)", StrongConstantTerm::Expansion.label());
    Ok(0)
}

fn cmd_scan(args: ScanArgs) -> Result<i32> {
    let mut cfg = ScanConfig::default();
    if let Some(path) = &args.config {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        match parse_config(&text) {
            Ok(file_cfg) => file_cfg.apply(&mut cfg),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return Ok(2);
            }
        }
    }
    if let Some(v) = args.alpha_min {
        cfg.alpha_min = v;
    }
    if let Some(v) = args.alpha_max {
        cfg.alpha_max = v;
    }
    if let Some(v) = args.points {
        cfg.points = v;
    }
    if args.log {
        cfg.spacing = Spacing::Logarithmic;
    }
    if let Some(v) = args.format {
        cfg.output_format = v;
    }
    if let Some(v) = args.output {
        cfg.output_path = Some(v);
    }
    if let Some(v) = args.plot {
        cfg.plot_path = Some(v);
    }
    if let Some(v) = args.series {
        cfg.plot_series = v;
    }
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return Ok(2);
    }

    log::info!(
        "scanning {} points on [{}, {}]",
        cfg.points,
        cfg.alpha_min,
        cfg.alpha_max
    );
    let outcome = run_scan(&cfg).map_err(anyhow::Error::msg)?;

    let mut rendered = Vec::new();
    match cfg.output_format {
        OutputFormat::Csv => emit_csv(&outcome.rows, &mut rendered)?,
        OutputFormat::Json => emit_json(&outcome.rows, &mut rendered)?,
    }
    match &cfg.output_path {
        Some(path) => write_file(path, &rendered)?,
        None => std::io::stdout().write_all(&rendered)?,
    }

    if let Some(path) = &cfg.plot_path {
        let mut svg = Vec::new();
        emit_svg_plot(&outcome.rows, cfg.plot_series, &mut svg)?;
        write_file(path, &svg)?;
    }

    if outcome.failures > 0 {
        eprintln!("scan: {} of {} rows failed", outcome.failures, outcome.rows.len());
        return Ok(1);
    }
    Ok(0)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}
