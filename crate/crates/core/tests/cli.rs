// Copyright 2026 The boostbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::f64::consts::SQRT_2;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn boostbell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boostbell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|x| x.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn verify_passes_at_default_tolerance() {
    let o = boostbell(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let checks = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .count();
    assert!(checks >= 40, "{checks}");
}

#[test]
fn verify_fails_at_unattainable_tolerance() {
    assert_eq!(
        boostbell(&["verify", "--tolerance", "1e-30"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_family_filter() {
    let o = boostbell(&["verify", "--only", "ghz", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().count() > 5);
    for l in text.lines() {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["family"], "ghz");
    }
}

#[test]
fn verify_rejects_bad_flags() {
    assert_eq!(
        boostbell(&["verify", "--tolerance", "abc"]).status.code(),
        Some(2)
    );
    assert_eq!(
        boostbell(&["verify", "--only", "xyz"]).status.code(),
        Some(2)
    );
}

#[test]
fn ghz_speed_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ghz.csv");
    let plot = dir.path().join("plots").join("ghz.gp");
    fs::create_dir(plot.parent().unwrap()).unwrap();
    let o = boostbell(&[
        "sweep",
        "--state",
        "ghz",
        "--model",
        "pauli",
        "--beta-min",
        "0",
        "--beta-max",
        "0.99",
        "--steps",
        "50",
        "--gamma",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--emit-plot",
        plot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (h, rows) = read_csv(&out);
    assert_eq!(h.join(","), boostbell::cli::CSV_HEADER);
    assert_eq!(rows.len(), 50);
    let sv = col(&h, "sv_num");
    assert!((rows[0][sv] - 4.0 * SQRT_2).abs() < 1e-9);
    assert!(rows.windows(2).all(|w| w[1][sv] < w[0][sv]));
    let d = col(&h, "max_abs_discrepancy");
    assert!(rows.iter().all(|r| r[d] < 1e-9));
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r[0], i as f64);
    }
    let script = fs::read_to_string(&plot).unwrap();
    assert!(script.contains("'../ghz.csv'"), "{script}");
}

#[test]
fn w_sweep_shows_mermin_excess() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let o = boostbell(&[
        "sweep",
        "--state",
        "w",
        "--beta-max",
        "0.99",
        "--steps",
        "20",
        "--gamma",
        "1e6",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (h, rows) = read_csv(&out);
    let last = rows.last().unwrap();
    assert!(last[col(&h, "m_num")] > last[col(&h, "sv_num")] / 2.0);
    for r in &rows {
        assert!((r[col(&h, "sv_num")] - r[col(&h, "sv_closed")]).abs() < 1e-9);
    }
}

#[test]
fn czachor_sweep_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = boostbell(&[
        "sweep",
        "--state",
        "ghz",
        "--model",
        "czachor",
        "--steps",
        "30",
        "--gamma",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (h, rows) = read_csv(&out);
    assert!(rows
        .iter()
        .all(|r| r[col(&h, "max_abs_discrepancy")] < 1e-9));
}

#[test]
fn energy_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e.csv");
    let o = boostbell(&[
        "sweep-energy",
        "--state",
        "ghz",
        "--beta",
        "0.9999",
        "--gamma-min",
        "1",
        "--gamma-max",
        "50",
        "--steps",
        "50",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (h, rows) = read_csv(&out);
    let sv = col(&h, "sv_num");
    assert_eq!(rows[0][col(&h, "omega_rad")], 0.0);
    assert!((rows[0][sv] - 4.0 * SQRT_2).abs() < 1e-9);
    assert!(rows.windows(2).all(|w| w[1][sv] < w[0][sv]));
    assert!(rows.last().unwrap()[sv] < 0.2);
}

#[test]
fn sweep_usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let o = out.to_str().unwrap();
    assert_eq!(
        boostbell(&["sweep", "--state", "ghz", "--beta-max", "1.0", "--out", o])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        boostbell(&[
            "sweep",
            "--state",
            "ghz",
            "--beta-min",
            "0.5",
            "--beta-max",
            "0.2",
            "--out",
            o
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        boostbell(&["sweep", "--state", "ghz", "--steps", "1", "--out", o])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        boostbell(&[
            "sweep-energy",
            "--state",
            "w",
            "--beta",
            "0.5",
            "--gamma-min",
            "0.5",
            "--out",
            o
        ])
        .status
        .code(),
        Some(2)
    );
    let bad = dir.path().join("missing").join("x.csv");
    assert_eq!(
        boostbell(&["sweep", "--state", "ghz", "--out", bad.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn optimize_recovers_lab_maxima() {
    let dir = tempfile::tempdir().unwrap();
    for (state, want, tol) in [("ghz", 4.0 * SQRT_2, 1e-6), ("w", 4.354, 1e-3)] {
        let out = dir.path().join(format!("{state}.json"));
        let o = boostbell(&[
            "optimize",
            "--state",
            state,
            "--model",
            "pauli",
            "--omega",
            "0",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let text = fs::read_to_string(&out).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!((v["best_value"].as_f64().unwrap() - want).abs() < tol);
        let keys = [
            "\"best_value\"",
            "\"angles\"",
            "\"restarts\"",
            "\"seed\"",
            "\"converged\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
    assert_eq!(
        boostbell(&["optimize", "--state", "ghz", "--restarts", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        boostbell(&["optimize", "--state", "ghz", "--param", "spiral"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn state_output() {
    let o = boostbell(&["state", "--state", "ghz", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1.0, 0.0, 0.0, 0.0]));
    for state in ["ghz", "w"] {
        let o = boostbell(&[
            "state", "--state", state, "--beta", "0.999999", "--gamma", "1e6",
        ]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(
            v["high_energy_limit_fidelity"].as_f64().unwrap() > 0.999,
            "{state}"
        );
        assert_eq!(v["amplitudes"].as_array().unwrap().len(), 8);
    }
    assert_eq!(
        boostbell(&["state", "--state", "w", "--gamma", "0.5"])
            .status
            .code(),
        Some(2)
    );
}
