//! Minimal static SVG line plots for scan results.
//!
//! Hand-rolled so output is a self-contained SVG 1.1 document with
//! deterministic bytes: fixed geometry, fixed colors, fixed float
//! formatting, no fonts beyond a generic family name.

use std::io::Write;

use anyhow::{bail, Result};

use crate::scan::{PlotSeries, ScanRow};

const WIDTH: f64 = 840.0;
const HEIGHT: f64 = 560.0;
const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 44.0;
const MARGIN_BOTTOM: f64 = 70.0;

const COLOR_OM: &str = "#1f77b4";
const COLOR_FEYNMAN: &str = "#d62728";

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
    px_lo: f64,
    px_hi: f64,
}

impl Axis {
    fn map(&self, v: f64) -> f64 {
        let t = if self.log {
            (v.ln() - self.lo.ln()) / (self.hi.ln() - self.lo.ln())
        } else {
            (v - self.lo) / (self.hi - self.lo)
        };
        self.px_lo + t * (self.px_hi - self.px_lo)
    }

    fn ticks(&self) -> Vec<(f64, String)> {
        if self.log {
            log_ticks(self.lo, self.hi)
        } else {
            linear_ticks(self.lo, self.hi)
        }
    }
}

fn linear_ticks(lo: f64, hi: f64) -> Vec<(f64, String)> {
    let span = hi - lo;
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let step = mag
        * if norm <= 1.0 {
            1.0
        } else if norm <= 2.0 {
            2.0
        } else if norm <= 5.0 {
            5.0
        } else {
            10.0
        };
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let mut ticks = Vec::new();
    let mut k = (lo / step).ceil() as i64;
    while k as f64 * step <= hi + 1e-9 * span {
        let v = k as f64 * step;
        ticks.push((v, format!("{v:.decimals$}")));
        k += 1;
    }
    ticks
}

fn log_ticks(lo: f64, hi: f64) -> Vec<(f64, String)> {
    let mut ticks = Vec::new();
    let k_lo = lo.log10().ceil() as i32;
    let k_hi = hi.log10().floor() as i32;
    for k in k_lo..=k_hi {
        ticks.push(10f64.powi(k));
    }
    if ticks.len() < 3 {
        // sparse decades: add 2× and 5× subticks
        for k in (k_lo - 1)..=k_hi {
            for m in [2.0, 5.0] {
                let v = m * 10f64.powi(k);
                if v >= lo && v <= hi {
                    ticks.push(v);
                }
            }
        }
        ticks.sort_by(f64::total_cmp);
    }
    ticks.into_iter().map(|v| (v, format!("{v}"))).collect()
}

struct Curve {
    label: &'static str,
    color: &'static str,
    points: Vec<(f64, f64)>,
}

/// Renders a static plot of the selected series.
///
/// Energy uses linear axes, mass log–log, and the relative energy
/// difference a logarithmic coupling axis. Requires at least two rows.
pub fn emit_svg_plot<W: Write>(rows: &[ScanRow], series: PlotSeries, out: &mut W) -> Result<()> {
    if rows.len() < 2 {
        bail!("plotting requires at least 2 scan rows, got {}", rows.len());
    }

    let (curves, x_log, y_log, title, y_label) = match series {
        PlotSeries::Energy => (
            vec![
                curve("closed form", COLOR_OM, rows, |r| (r.alpha, r.e_om), false, false),
                curve("Feynman", COLOR_FEYNMAN, rows, |r| (r.alpha, r.e_feynman), false, false),
            ],
            false,
            false,
            "Polaron ground-state energy",
            "E0 [phonon units]",
        ),
        PlotSeries::Mass => (
            vec![
                curve("closed form", COLOR_OM, rows, |r| (r.alpha, r.m_om), true, true),
                curve("Feynman", COLOR_FEYNMAN, rows, |r| (r.alpha, r.m_feynman), true, true),
            ],
            true,
            true,
            "Polaron effective mass",
            "m_p [band mass]",
        ),
        PlotSeries::RelDiff => (
            vec![curve(
                "relative difference",
                COLOR_OM,
                rows,
                |r| (r.alpha, r.rel_diff_e),
                true,
                false,
            )],
            true,
            false,
            "Relative energy difference vs Feynman",
            "|E_om - E_f| / |E_f|",
        ),
    };

    let finite: Vec<(f64, f64)> = curves.iter().flat_map(|c| c.points.iter().copied()).collect();
    if finite.len() < 2 {
        bail!("not enough finite points to plot");
    }
    let (x_axis, y_axis) = axes(&finite, x_log, y_log);

    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )?;
    writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#)?;
    writeln!(
        out,
        r#"<text x="{:.2}" y="24" font-family="sans-serif" font-size="18" text-anchor="middle">{title}</text>"#,
        0.5 * WIDTH
    )?;

    // frame
    let (x0, x1) = (MARGIN_LEFT, WIDTH - MARGIN_RIGHT);
    let (y0, y1) = (HEIGHT - MARGIN_BOTTOM, MARGIN_TOP);
    writeln!(
        out,
        r#"<rect x="{x0:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black" stroke-width="1"/>"#,
        x1 - x0,
        y0 - y1
    )?;

    for (v, label) in x_axis.ticks() {
        let px = x_axis.map(v);
        writeln!(out, r#"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#, y0 + 6.0)?;
        writeln!(out, r##"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{y1:.2}" stroke="#dddddd" stroke-width="0.5"/>"##)?;
        writeln!(
            out,
            r#"<text x="{px:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{label}</text>"#,
            y0 + 22.0
        )?;
    }
    for (v, label) in y_axis.ticks() {
        let py = y_axis.map(v);
        writeln!(out, r#"<line x1="{:.2}" y1="{py:.2}" x2="{x0:.2}" y2="{py:.2}" stroke="black" stroke-width="1"/>"#, x0 - 6.0)?;
        writeln!(out, r##"<line x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}" stroke="#dddddd" stroke-width="0.5"/>"##)?;
        writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="end">{label}</text>"#,
            x0 - 10.0,
            py + 4.0
        )?;
    }

    // axis titles
    writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">alpha</text>"#,
        0.5 * (x0 + x1),
        HEIGHT - 24.0
    )?;
    writeln!(
        out,
        r#"<text x="24" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle" transform="rotate(-90 24 {:.2})">{y_label}</text>"#,
        0.5 * (y0 + y1),
        0.5 * (y0 + y1)
    )?;

    for c in &curves {
        let pts: Vec<String> = c
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", x_axis.map(x), y_axis.map(y)))
            .collect();
        writeln!(
            out,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            c.color,
            pts.join(" ")
        )?;
    }

    // legend
    for (i, c) in curves.iter().enumerate() {
        let ly = y1 + 18.0 + 20.0 * i as f64;
        writeln!(
            out,
            r#"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/>"#,
            x1 - 170.0,
            x1 - 140.0,
            c.color
        )?;
        writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13">{}</text>"#,
            x1 - 132.0,
            ly + 4.0,
            c.label
        )?;
    }

    writeln!(out, "</svg>")?;
    Ok(())
}

fn curve(
    label: &'static str,
    color: &'static str,
    rows: &[ScanRow],
    extract: impl Fn(&ScanRow) -> (f64, f64),
    x_log: bool,
    y_log: bool,
) -> Curve {
    let points = rows
        .iter()
        .map(&extract)
        .filter(|&(x, y)| {
            x.is_finite() && y.is_finite() && (!x_log || x > 0.0) && (!y_log || y > 0.0)
        })
        .collect();
    Curve { label, color, points }
}

fn axes(points: &[(f64, f64)], x_log: bool, y_log: bool) -> (Axis, Axis) {
    let mut x_lo = f64::INFINITY;
    let mut x_hi = f64::NEG_INFINITY;
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for &(x, y) in points {
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_lo = y_lo.min(y);
        y_hi = y_hi.max(y);
    }
    let pad = |lo: &mut f64, hi: &mut f64, log: bool| {
        if log {
            *lo /= 1.1;
            *hi *= 1.1;
        } else {
            let span = (*hi - *lo).max(1e-12 * hi.abs().max(1.0));
            *lo -= 0.05 * span;
            *hi += 0.05 * span;
        }
    };
    pad(&mut x_lo, &mut x_hi, x_log);
    pad(&mut y_lo, &mut y_hi, y_log);
    (
        Axis { lo: x_lo, hi: x_hi, log: x_log, px_lo: MARGIN_LEFT, px_hi: WIDTH - MARGIN_RIGHT },
        Axis { lo: y_lo, hi: y_hi, log: y_log, px_lo: HEIGHT - MARGIN_BOTTOM, px_hi: MARGIN_TOP },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(alpha: f64) -> ScanRow {
        ScanRow {
            alpha,
            e_om: -alpha,
            e_feynman: -1.1 * alpha,
            rel_diff_e: 0.1,
            m_om: 1.0 + alpha * alpha,
            m_feynman: 1.0 + alpha,
            rel_diff_m: 0.2,
        }
    }

    #[test]
    fn two_rows_energy_two_polylines_of_two_points() {
        let rows = vec![row(1.0), row(2.0)];
        let mut buf = Vec::new();
        emit_svg_plot(&rows, PlotSeries::Energy, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.matches("<polyline").count(), 2);
        for line in text.lines().filter(|l| l.contains("<polyline")) {
            let pts = line.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
            assert_eq!(pts.split(' ').count(), 2);
        }
        assert!(text.starts_with("<?xml"));
        assert!(text.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn mass_plot_uses_log_axes() {
        let rows: Vec<ScanRow> = (0..51).map(|i| row(0.1 * 1.12f64.powi(i))).collect();
        let mut buf = Vec::new();
        emit_svg_plot(&rows, PlotSeries::Mass, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // decade tick labels on both axes
        assert!(text.contains(">1<"));
        assert!(text.contains(">10<"));
        assert_eq!(text.matches("<polyline").count(), 2);
    }

    #[test]
    fn rel_diff_plot_single_polyline() {
        let rows = vec![row(0.1), row(1.0), row(10.0)];
        let mut buf = Vec::new();
        emit_svg_plot(&rows, PlotSeries::RelDiff, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.matches("<polyline").count(), 1);
    }

    #[test]
    fn fewer_than_two_rows_is_an_error() {
        let mut buf = Vec::new();
        assert!(emit_svg_plot(&[row(1.0)], PlotSeries::Energy, &mut buf).is_err());
        assert!(emit_svg_plot(&[], PlotSeries::Energy, &mut buf).is_err());
    }

    #[test]
    fn nan_points_are_dropped() {
        let mut rows = vec![row(1.0), row(2.0), row(3.0)];
        rows[1].e_feynman = f64::NAN;
        let mut buf = Vec::new();
        emit_svg_plot(&rows, PlotSeries::Energy, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let feynman_line = text
            .lines()
            .filter(|l| l.contains("<polyline"))
            .nth(1)
            .unwrap();
        let pts = feynman_line.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(pts.split(' ').count(), 2);
    }

    #[test]
    fn deterministic_bytes() {
        let rows: Vec<ScanRow> = (0..20).map(|i| row(0.5 + 0.37 * i as f64)).collect();
        let render = || {
            let mut buf = Vec::new();
            emit_svg_plot(&rows, PlotSeries::Energy, &mut buf).unwrap();
            buf
        };
        assert_eq!(render(), render());
    }
}
