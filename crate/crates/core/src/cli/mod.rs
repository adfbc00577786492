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

//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails or a file cannot be
//! written, 2 on invalid flags.

pub mod checks;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Component, Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::closedform as cf;
use crate::error::Error;
use crate::inequalities::{
    report, InequalityReport, MeasurementSettings, SpinModel, W_OPTIMAL_POLAR,
};
use crate::optimizer::{maximize, AngleParameterization, Functional};
use crate::qcore::SpinState;
use crate::spinops::{boost_state, rotate_spins, BoostContext, Direction};
use crate::states::{
    boosted_ghz, boosted_w, ghz_limit_state, make, w_limit_state, NamedState, Regime,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "boostbell",
    version,
    about = "Boosted three-particle Bell-like inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every closed-form-versus-oracle check.
    Verify(VerifyArgs),
    /// Sweep the boost speed at a fixed energy factor.
    Sweep(SweepArgs),
    /// Sweep the energy factor at a fixed boost speed.
    SweepEnergy(SweepEnergyArgs),
    /// Maximize an inequality functional over measurement angles.
    Optimize(OptimizeArgs),
    /// Print the boosted state and its decomposition as JSON.
    State(StateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateArg {
    Ghz,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Pauli,
    Czachor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    PlanarAzimuth,
    PlanarPolar,
    SymmetricAzimuth,
    SymmetricPolar,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionalArg {
    Sv,
    M,
    Mprime,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Absolute tolerance for exact checks.
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    /// Run only one family: core, ghz, w, tau or czachor.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub state: StateArg,
    #[arg(long, value_enum, default_value_t = ModelArg::Pauli)]
    pub model: ModelArg,
    #[arg(long, default_value_t = 0.0)]
    pub beta_min: f64,
    #[arg(long, default_value_t = 0.99)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Particle energy factor p0/m.
    #[arg(long, default_value_t = 2.0)]
    pub gamma: f64,
    #[arg(long)]
    pub out: PathBuf,
    /// Also write a gnuplot script plotting the CSV.
    #[arg(long)]
    pub emit_plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepEnergyArgs {
    #[arg(long, value_enum)]
    pub state: StateArg,
    #[arg(long, value_enum, default_value_t = ModelArg::Pauli)]
    pub model: ModelArg,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma_min: f64,
    #[arg(long, default_value_t = 50.0)]
    pub gamma_max: f64,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub emit_plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long, value_enum)]
    pub state: StateArg,
    #[arg(long, value_enum, default_value_t = ModelArg::Pauli)]
    pub model: ModelArg,
    /// Wigner angle applied to the state before optimizing.
    #[arg(long, default_value_t = 0.0)]
    pub omega: f64,
    /// Defaults to symmetric-azimuth for ghz and symmetric-polar for w.
    #[arg(long, value_enum)]
    pub param: Option<ParamArg>,
    #[arg(long, default_value_t = 8)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FunctionalArg::Sv)]
    pub functional: FunctionalArg,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Particle speed for the Czachor model, along x.
    #[arg(long, default_value_t = 0.0)]
    pub speed: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[arg(long, value_enum)]
    pub state: StateArg,
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::SweepEnergy(a) => cmd_sweep_energy(a, out),
        Command::Optimize(a) => cmd_optimize(a, out),
        Command::State(a) => cmd_state(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAILURE
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Runtime(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Runtime(format!("stdout: {e}")))
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.tolerance.is_nan() || a.tolerance < 0.0 {
        return Err(Failure::Usage(format!(
            "tolerance must be non-negative, got {}",
            a.tolerance
        )));
    }
    if let Some(f) = &a.only {
        if !checks::FAMILIES.contains(&f.as_str()) {
            return Err(Failure::Usage(format!(
                "unknown family '{f}', expected one of {}",
                checks::FAMILIES.join(", ")
            )));
        }
    }
    let selected: Vec<_> = checks::registry()
        .into_iter()
        .filter(|c| a.only.as_deref().is_none_or(|f| c.family == f))
        .collect();
    let records: Vec<_> = selected
        .par_iter()
        .map(|c| c.evaluate(a.tolerance))
        .collect();
    let mut text = String::new();
    for r in &records {
        match a.format {
            FormatArg::Jsonl => {
                text.push_str(&serde_json::to_string(r).expect("record serializes"));
                text.push('\n');
            }
            FormatArg::Text => {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let limit = r
                    .threshold
                    .map_or("report".to_string(), |t| format!("<= {t:e}"));
                let _ = write!(
                    text,
                    "{status}  [{}] {}  error {:.3e} ({limit})",
                    r.family, r.name, r.error
                );
                if !r.detail.is_empty() {
                    let _ = write!(text, "  {}", r.detail);
                }
                text.push('\n');
            }
        }
    }
    let failed = records.iter().filter(|r| !r.passed).count();
    if a.format == FormatArg::Text {
        let _ = writeln!(
            text,
            "{} checks, {} passed, {} failed",
            records.len(),
            records.len() - failed,
            failed
        );
    }
    emit(out, &text)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

/// One line of sweep output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub index: usize,
    pub beta: f64,
    pub gamma: f64,
    pub omega_rad: f64,
    pub sv_num: f64,
    pub m_num: f64,
    pub mprime_num: f64,
    pub sv_closed: f64,
    pub m_closed: f64,
    pub mprime_closed: f64,
    pub max_abs_discrepancy: f64,
}

pub const CSV_HEADER: &str = "index,beta,gamma,omega_rad,sv_num,m_num,mprime_num,sv_closed,m_closed,mprime_closed,max_abs_discrepancy";

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.index,
            self.beta,
            self.gamma,
            self.omega_rad,
            self.sv_num,
            self.m_num,
            self.mprime_num,
            self.sv_closed,
            self.m_closed,
            self.mprime_closed,
            self.max_abs_discrepancy
        )
    }
}

fn lab_state(s: StateArg) -> SpinState {
    match s {
        StateArg::Ghz => make(NamedState::Ghz),
        StateArg::W => make(NamedState::W),
    }
}

fn lab_settings(s: StateArg) -> MeasurementSettings {
    match s {
        StateArg::Ghz => MeasurementSettings::ghz_optimal(),
        StateArg::W => MeasurementSettings::w_optimal(),
    }
}

/// Closed-form values for the sweep; NaN where none exists.
fn closed_values(state: StateArg, model: ModelArg, beta: f64, omega: f64) -> InequalityReport {
    match (state, model) {
        (StateArg::Ghz, ModelArg::Pauli) => cf::ghz_inequalities_boosted(omega),
        (StateArg::Ghz, ModelArg::Czachor) => cf::czachor_ghz_inequalities(beta, omega),
        (StateArg::W, ModelArg::Pauli) => {
            let sv = cf::w_inequalities_boosted(omega, W_OPTIMAL_POLAR).sv;
            let p = cf::w_inequalities_published(omega, W_OPTIMAL_POLAR);
            InequalityReport::from_values(sv, p.m, p.m_prime)
        }
        (StateArg::W, ModelArg::Czachor) => {
            InequalityReport::from_values(f64::NAN, f64::NAN, f64::NAN)
        }
    }
}

/// Evaluates one sweep point.
pub fn sweep_row(
    index: usize,
    state: StateArg,
    model: ModelArg,
    beta: f64,
    gamma: f64,
) -> crate::error::Result<SweepRow> {
    let ctx = BoostContext::new(beta, gamma)?;
    let omega = ctx.wigner_angle();
    let boosted = boost_state(&lab_state(state), &ctx)?;
    let spin_model = match model {
        ModelArg::Pauli => SpinModel::Pauli,
        ModelArg::Czachor => SpinModel::czachor(beta, Direction::X)?,
    };
    let num = report(&boosted, &lab_settings(state), &spin_model)?;
    let closed = closed_values(state, model, beta, omega);
    let disc = (num.sv - closed.sv)
        .abs()
        .max((num.m - closed.m).abs())
        .max((num.m_prime - closed.m_prime).abs());
    let disc = if closed.sv.is_nan() { f64::NAN } else { disc };
    Ok(SweepRow {
        index,
        beta,
        gamma,
        omega_rad: omega,
        sv_num: num.sv,
        m_num: num.m,
        mprime_num: num.m_prime,
        sv_closed: closed.sv,
        m_closed: closed.m,
        mprime_closed: closed.m_prime,
        max_abs_discrepancy: disc,
    })
}

/// `n` evenly spaced values with both endpoints exact.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn render_csv(rows: &[SweepRow]) -> String {
    let mut s = String::with_capacity(64 * (rows.len() + 1));
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}

fn relative_to(from_dir: &Path, target: &Path) -> PathBuf {
    let abs = |p: &Path| {
        let p = if p.is_absolute() {
            p.to_path_buf()
        } else {
            std::env::current_dir().unwrap_or_default().join(p)
        };
        p.components()
            .filter(|c| !matches!(c, Component::CurDir))
            .collect::<Vec<_>>()
            .iter()
            .collect::<PathBuf>()
    };
    let from = abs(from_dir);
    let to = abs(target);
    let fc: Vec<_> = from.components().collect();
    let tc: Vec<_> = to.components().collect();
    let common = fc.iter().zip(&tc).take_while(|(a, b)| a == b).count();
    let mut rel = PathBuf::new();
    for _ in common..fc.len() {
        rel.push("..");
    }
    for c in &tc[common..] {
        rel.push(c);
    }
    rel
}

fn plot_script(csv_rel: &Path, x_column: usize, x_label: &str) -> String {
    let f = csv_rel.display().to_string().replace('\'', "\\'");
    format!(
        "set datafile separator ','\n\
         set key outside\n\
         set xlabel '{x_label}'\n\
         set ylabel 'value'\n\
         plot '{f}' using {x}:5 with lines title 'sv (oracle)', \\\n\
         \x20    '{f}' using {x}:6 with lines title 'm (oracle)', \\\n\
         \x20    '{f}' using {x}:7 with lines title \"m' (oracle)\", \\\n\
         \x20    '{f}' using {x}:8 with points title 'sv (closed form)', \\\n\
         \x20    '{f}' using {x}:9 with points title 'm (closed form)', \\\n\
         \x20    4 with dots title 'sv bound', 2 with dots title 'm bound'\n",
        x = x_column
    )
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

/// Horizontal axis of the emitted plot.
struct Axis {
    column: usize,
    label: &'static str,
}

fn finish_sweep(
    points: Vec<(f64, f64)>,
    state: StateArg,
    model: ModelArg,
    out_path: &Path,
    plot: Option<(&PathBuf, Axis)>,
    out: &mut dyn Write,
) -> CmdResult {
    let rows: Vec<SweepRow> = points
        .par_iter()
        .enumerate()
        .map(|(i, &(b, g))| sweep_row(i, state, model, b, g))
        .collect::<crate::error::Result<_>>()?;
    write_file(out_path, &render_csv(&rows))?;
    if let Some((p, axis)) = plot {
        let dir = p.parent().unwrap_or(Path::new(""));
        let rel = relative_to(dir, out_path);
        write_file(p, &plot_script(&rel, axis.column, axis.label))?;
    }
    emit(
        out,
        &format!("wrote {} rows to {}\n", rows.len(), out_path.display()),
    )?;
    Ok(EXIT_OK)
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> CmdResult {
    let ok = a.beta_min >= 0.0 && a.beta_min <= a.beta_max && a.beta_max < 1.0;
    if !ok {
        return Err(Failure::Usage(format!(
            "need 0 <= beta-min <= beta-max < 1, got [{}, {}]",
            a.beta_min, a.beta_max
        )));
    }
    if a.steps < 2 {
        return Err(Failure::Usage("steps must be at least 2".into()));
    }
    if a.gamma.is_nan() || a.gamma < 1.0 || !a.gamma.is_finite() {
        return Err(Failure::Usage(format!(
            "gamma must be >= 1, got {}",
            a.gamma
        )));
    }
    let pts = linspace(a.beta_min, a.beta_max, a.steps)
        .into_iter()
        .map(|b| (b, a.gamma))
        .collect();
    let axis = Axis {
        column: 2,
        label: "beta",
    };
    let plot = a.emit_plot.as_ref().map(|p| (p, axis));
    finish_sweep(pts, a.state, a.model, &a.out, plot, out)
}

fn cmd_sweep_energy(a: &SweepEnergyArgs, out: &mut dyn Write) -> CmdResult {
    if !(a.beta >= 0.0 && a.beta < 1.0) {
        return Err(Failure::Usage(format!(
            "beta must lie in [0, 1), got {}",
            a.beta
        )));
    }
    let ok = a.gamma_min >= 1.0 && a.gamma_min <= a.gamma_max && a.gamma_max.is_finite();
    if !ok {
        return Err(Failure::Usage(format!(
            "need 1 <= gamma-min <= gamma-max, got [{}, {}]",
            a.gamma_min, a.gamma_max
        )));
    }
    if a.steps < 2 {
        return Err(Failure::Usage("steps must be at least 2".into()));
    }
    let pts = linspace(a.gamma_min, a.gamma_max, a.steps)
        .into_iter()
        .map(|g| (a.beta, g))
        .collect();
    let axis = Axis {
        column: 3,
        label: "gamma",
    };
    let plot = a.emit_plot.as_ref().map(|p| (p, axis));
    finish_sweep(pts, a.state, a.model, &a.out, plot, out)
}

#[derive(Serialize)]
struct OptimizeOutput {
    best_value: f64,
    angles: Vec<f64>,
    restarts: usize,
    seed: u64,
    converged: bool,
}

fn cmd_optimize(a: &OptimizeArgs, out: &mut dyn Write) -> CmdResult {
    if !a.omega.is_finite() {
        return Err(Failure::Usage("omega must be finite".into()));
    }
    let state = rotate_spins(&lab_state(a.state), a.omega)?;
    let model = match a.model {
        ModelArg::Pauli => SpinModel::Pauli,
        ModelArg::Czachor => SpinModel::czachor(a.speed, Direction::X)?,
    };
    let param = match a.param.unwrap_or(match a.state {
        StateArg::Ghz => ParamArg::SymmetricAzimuth,
        StateArg::W => ParamArg::SymmetricPolar,
    }) {
        ParamArg::PlanarAzimuth => AngleParameterization::PlanarAzimuth,
        ParamArg::PlanarPolar => AngleParameterization::PlanarPolar,
        ParamArg::SymmetricAzimuth => AngleParameterization::SymmetricAzimuth,
        ParamArg::SymmetricPolar => AngleParameterization::SymmetricPolar,
        ParamArg::General => AngleParameterization::General,
    };
    let functional = match a.functional {
        FunctionalArg::Sv => Functional::Svetlichny,
        FunctionalArg::M => Functional::Mermin,
        FunctionalArg::Mprime => Functional::Collins,
    };
    let r = maximize(functional, &state, &model, param, a.restarts, a.seed, a.tol)?;
    let doc = OptimizeOutput {
        best_value: r.best_value,
        angles: r.best_angles,
        restarts: r.restarts_used,
        seed: a.seed,
        converged: r.converged,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializes");
    text.push('\n');
    match &a.out {
        Some(p) => {
            write_file(p, &text)?;
            emit(
                out,
                &format!("best value {} written to {}\n", doc.best_value, p.display()),
            )?;
        }
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Amplitude {
    label: String,
    value: [f64; 2],
}

#[derive(Serialize)]
struct StateOutput {
    state: StateArg,
    beta: f64,
    gamma: f64,
    omega_rad: f64,
    amplitudes: Vec<Amplitude>,
    basis: [&'static str; 4],
    coefficients: [f64; 4],
    fidelities: [f64; 4],
    high_energy_limit_fidelity: f64,
    low_energy_limit_fidelity: f64,
}

fn cmd_state(a: &StateArgs, out: &mut dyn Write) -> CmdResult {
    let ctx = BoostContext::new(a.beta, a.gamma)?;
    let omega = ctx.wigner_angle();
    let lab = lab_state(a.state);
    let boosted = boost_state(&lab, &ctx)?;
    let (basis, coefficients, components, high, low) = match a.state {
        StateArg::Ghz => {
            let (_, c) = boosted_ghz(omega)?;
            (
                ["GHZ", "GHZ-bar", "W", "W-bar"],
                c.as_array(),
                [
                    make(NamedState::Ghz),
                    make(NamedState::GhzBar),
                    make(NamedState::W),
                    make(NamedState::WBar),
                ],
                ghz_limit_state(Regime::HighEnergy),
                ghz_limit_state(Regime::LowEnergy),
            )
        }
        StateArg::W => {
            let (_, c) = boosted_w(omega)?;
            (
                ["+++", "---", "W", "W-bar"],
                c.as_array(),
                [
                    SpinState::basis(3, 0)?,
                    SpinState::basis(3, 7)?,
                    make(NamedState::W),
                    make(NamedState::WBar),
                ],
                w_limit_state(Regime::HighEnergy),
                w_limit_state(Regime::LowEnergy),
            )
        }
    };
    let mut fidelities = [0.0; 4];
    for (f, s) in fidelities.iter_mut().zip(&components) {
        *f = boosted.fidelity(s)?;
    }
    let doc = StateOutput {
        state: a.state,
        beta: a.beta,
        gamma: a.gamma,
        omega_rad: omega,
        amplitudes: boosted
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(i, z)| Amplitude {
                label: crate::qcore::basis_label(i, 3),
                value: [z.re, z.im],
            })
            .collect(),
        basis,
        coefficients,
        fidelities,
        high_energy_limit_fidelity: boosted.fidelity(&high)?,
        low_energy_limit_fidelity: boosted.fidelity(&low)?,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializes");
    text.push('\n');
    emit(out, &text)?;
    Ok(EXIT_OK)
}
