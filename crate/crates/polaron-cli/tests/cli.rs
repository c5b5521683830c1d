//! End-to-end checks of the binary: exit codes, output contracts, config
//! file handling.

use std::process::{Command, Output};

fn polaron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polaron"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn energy_at_zero_prints_zero_and_exits_cleanly() {
    let out = polaron(&["energy", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0.00000000000e0");
}

#[test]
fn energy_breakdown_lists_all_terms() {
    let out = polaron(&["energy", "--alpha", "1", "--breakdown"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for key in ["alpha", "omega", "e0_zeroth", "i1", "i2", "i3", "total"] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
    assert!(text.contains("-9.13385267323e-1"));
}

#[test]
fn mass_and_feynman_subcommands() {
    let out = polaron(&["mass", "--alpha", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2.08214162690e2"));

    let out = polaron(&["feynman", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("converged  true"));
    assert!(text.contains("-1.01303083"));
}

#[test]
fn verify_grid_one_prints_five_passes() {
    let out = polaron(&["verify", "--grid", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 5);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("verify: 5/5 comparisons passed"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(polaron(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(polaron(&["energy", "--unknown-flag", "3"]).status.code(), Some(2));
    assert_eq!(polaron(&["scan", "--points", "1"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    let out = polaron(&["energy", "--alpha", "-3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_writes_csv_of_requested_cardinality() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = polaron(&[
        "scan",
        "--alpha-min", "0.1",
        "--alpha-max", "20",
        "--points", "51",
        "--log",
        "--format", "csv",
        "--output", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 52); // header + 51 rows
    let rows = polaron_cli::parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 51);
    assert_eq!(rows[0].alpha, 0.1);
    assert_eq!(rows[50].alpha, 20.0);
}

#[test]
fn scan_json_output_is_an_array_of_objects() {
    let out = polaron(&[
        "scan",
        "--alpha-min", "1",
        "--alpha-max", "2",
        "--points", "2",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    // field order in the emitted bytes follows the row layout
    let positions: Vec<usize> = ["alpha", "e_om", "e_feynman", "rel_diff_e", "m_om", "m_feynman", "rel_diff_m"]
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).expect(k))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
}

#[test]
fn config_file_drives_scan_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("scan.conf");
    let csv = dir.path().join("out.csv");
    std::fs::write(
        &conf,
        format!(
            "# test scan\nalpha_min = 0.5\nalpha_max = 5\npoints = 9\nspacing = logarithmic\nformat = csv\noutput = {}\n",
            csv.display()
        ),
    )
    .unwrap();

    let out = polaron(&["scan", "--config", conf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows = polaron_cli::parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 9);

    // --points overrides the file value
    let out = polaron(&["scan", "--config", conf.to_str().unwrap(), "--points", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = polaron_cli::parse_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].alpha, 0.5);
    assert_eq!(rows[2].alpha, 5.0);
}

#[test]
fn malformed_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bad.conf");
    std::fs::write(&conf, "alpha_mid = 7\n").unwrap();
    let out = polaron(&["scan", "--config", conf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_1() {
    let out = polaron(&[
        "scan",
        "--alpha-min", "1",
        "--alpha-max", "2",
        "--points", "2",
        "--output", "/nonexistent-dir/rows.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn plot_series_flag_selects_curves() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("plot.svg");
    let out = polaron(&[
        "scan",
        "--alpha-min", "0.5",
        "--alpha-max", "8",
        "--points", "5",
        "--log",
        "--plot", svg.to_str().unwrap(),
        "--series", "rel_diff",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<polyline").count(), 1);
    assert!(text.contains("Relative energy difference"));
}
