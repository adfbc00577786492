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

//! Derivative-free search for measurement settings that maximize a
//! Svetlichny, Mermin or Collins functional.
//!
//! Each restart runs a compass search: poll `±step` along every angle,
//! move to the best strict improvement, otherwise halve the step. Symmetric
//! modes seed restarts from the best points of a `π/24` grid; the others
//! draw starts uniformly from `[0, 2π)` with a [`ChaCha8Rng`] seeded by
//! `seed_from_u64(seed)`.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::inequalities::{correlation_table, CorrelationTable, MeasurementSettings, SpinModel};
use crate::qcore::SpinState;
use crate::spinops::Direction;

/// Initial compass step.
pub const INITIAL_STEP: f64 = PI / 12.0;
/// Grid resolution of the symmetric-mode scan.
pub const GRID_STEP: f64 = PI / 24.0;
/// Polls allowed per restart before giving up.
pub const ITERATION_CAP: usize = 100_000;
/// Candidates this close to the best value count as tied.
pub const TIE_TOL: f64 = 1e-12;
/// Smallest gain accepted as a strict improvement.
const MIN_GAIN: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Functional {
    Svetlichny,
    Mermin,
    Collins,
}

impl Functional {
    pub fn evaluate(&self, t: &CorrelationTable) -> f64 {
        match self {
            Functional::Svetlichny => t.svetlichny_signed().abs(),
            Functional::Mermin => t.mermin_signed().abs(),
            Functional::Collins => t.collins_signed().abs(),
        }
    }
}

/// How an angle vector maps onto the six measurement directions, listed
/// in the order `A, A', B, B', C, C'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AngleParameterization {
    /// Six azimuths in the x-y plane.
    PlanarAzimuth,
    /// Six polar angles in the x-z plane.
    PlanarPolar,
    /// `(φ, φ')` shared by all particles.
    SymmetricAzimuth,
    /// `(θ, θ')` shared by all particles.
    SymmetricPolar,
    /// A `(θ, φ)` pair per direction.
    General,
}

impl AngleParameterization {
    pub fn dimension(&self) -> usize {
        match self {
            AngleParameterization::PlanarAzimuth | AngleParameterization::PlanarPolar => 6,
            AngleParameterization::SymmetricAzimuth | AngleParameterization::SymmetricPolar => 2,
            AngleParameterization::General => 12,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.dimension() == 2
    }

    pub fn settings(&self, angles: &[f64]) -> Result<MeasurementSettings> {
        if angles.len() != self.dimension() {
            return Err(Error::InvalidLength(angles.len()));
        }
        let a = angles;
        Ok(match self {
            AngleParameterization::PlanarAzimuth => {
                MeasurementSettings::azimuthal([a[0], a[2], a[4]], [a[1], a[3], a[5]])
            }
            AngleParameterization::PlanarPolar => {
                MeasurementSettings::polar([a[0], a[2], a[4]], [a[1], a[3], a[5]])
            }
            AngleParameterization::SymmetricAzimuth => {
                MeasurementSettings::symmetric_azimuthal(a[0], a[1])
            }
            AngleParameterization::SymmetricPolar => {
                MeasurementSettings::symmetric_polar(a[0], a[1])
            }
            AngleParameterization::General => {
                let d = |k: usize| Direction::spherical(a[2 * k], a[2 * k + 1]);
                MeasurementSettings::new(d(0), d(1), d(2), d(3), d(4), d(5))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub best_value: f64,
    #[serde(skip)]
    pub best_settings: MeasurementSettings,
    pub best_angles: Vec<f64>,
    pub restarts_used: usize,
    pub iterations: usize,
    pub converged: bool,
}

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

struct Objective<'a, F: Fn(&CorrelationTable) -> f64 + Sync> {
    state: &'a SpinState,
    model: &'a SpinModel,
    param: AngleParameterization,
    score: F,
}

impl<F: Fn(&CorrelationTable) -> f64 + Sync> Objective<'_, F> {
    fn value(&self, angles: &[f64]) -> Result<f64> {
        let s = self.param.settings(angles)?;
        Ok((self.score)(&correlation_table(
            self.state, &s, self.model,
        )?))
    }
}

struct Local {
    value: f64,
    angles: Vec<f64>,
    iterations: usize,
    converged: bool,
}

fn compass<F: Fn(&CorrelationTable) -> f64 + Sync>(
    obj: &Objective<'_, F>,
    start: Vec<f64>,
    tol: f64,
    cap: usize,
) -> Result<Local> {
    let mut x: Vec<f64> = start.into_iter().map(wrap_angle).collect();
    let mut fx = obj.value(&x)?;
    let mut step = INITIAL_STEP;
    let mut iterations = 0;
    while step >= tol {
        if iterations >= cap {
            return Ok(Local {
                value: fx,
                angles: x,
                iterations,
                converged: false,
            });
        }
        iterations += 1;
        let mut best: Option<(f64, Vec<f64>)> = None;
        for k in 0..x.len() {
            for sign in [1.0, -1.0] {
                let mut y = x.clone();
                y[k] = wrap_angle(y[k] + sign * step);
                let fy = obj.value(&y)?;
                if fy > best.as_ref().map_or(fx + MIN_GAIN, |b| b.0) {
                    best = Some((fy, y));
                }
            }
        }
        match best {
            Some((fy, y)) => {
                fx = fy;
                x = y;
            }
            None => step /= 2.0,
        }
    }
    Ok(Local {
        value: fx,
        angles: x,
        iterations,
        converged: true,
    })
}

fn grid_starts<F: Fn(&CorrelationTable) -> f64 + Sync>(
    obj: &Objective<'_, F>,
    count: usize,
) -> Result<Vec<Vec<f64>>> {
    let n = (TAU / GRID_STEP).round() as usize;
    let mut pts = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let p = vec![i as f64 * GRID_STEP, j as f64 * GRID_STEP];
            let v = obj.value(&p)?;
            pts.push((v, p));
        }
    }
    pts.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| lex_cmp(&a.1, &b.1)));
    Ok(pts.into_iter().take(count).map(|p| p.1).collect())
}

fn random_starts(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| rng.random_range(0.0..TAU)).collect())
        .collect()
}

fn run<F: Fn(&CorrelationTable) -> f64 + Sync>(
    obj: &Objective<'_, F>,
    starts: Vec<Vec<f64>>,
    tol: f64,
    cap: usize,
) -> Result<OptimizationResult> {
    let restarts_used = starts.len();
    let locals: Vec<Local> = starts
        .into_par_iter()
        .map(|s| compass(obj, s, tol, cap))
        .collect::<Result<_>>()?;
    let best_value = locals
        .iter()
        .map(|l| l.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let chosen = locals
        .iter()
        .filter(|l| l.value >= best_value - TIE_TOL)
        .min_by(|a, b| lex_cmp(&a.angles, &b.angles))
        .expect("at least one restart");
    Ok(OptimizationResult {
        best_value,
        best_settings: obj.param.settings(&chosen.angles)?,
        best_angles: chosen.angles.clone(),
        restarts_used,
        iterations: locals.iter().map(|l| l.iterations).sum(),
        converged: locals.iter().all(|l| l.converged),
    })
}

fn check_budget(restarts: usize, tol: f64) -> Result<()> {
    if restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Maximizes `functional` over settings of shape `param`.
///
/// The returned value is the largest found over all restarts; the reported
/// angles are the lexicographically smallest among restarts within
/// [`TIE_TOL`] of it, so the result does not depend on scheduling.
pub fn maximize(
    functional: Functional,
    state: &SpinState,
    model: &SpinModel,
    param: AngleParameterization,
    restarts: usize,
    seed: u64,
    tol: f64,
) -> Result<OptimizationResult> {
    check_budget(restarts, tol)?;
    let obj = Objective {
        state,
        model,
        param,
        score: |t: &CorrelationTable| functional.evaluate(t),
    };
    let starts = if param.is_symmetric() {
        grid_starts(&obj, restarts)?
    } else {
        random_starts(param.dimension(), restarts, seed)
    };
    run(&obj, starts, tol, ITERATION_CAP)
}

/// Number of sampled points that are refined by compass search.
const PROBE_REFINED: usize = 8;
const PROBE_TOL: f64 = 1e-7;
const PROBE_CAP: usize = 5_000;

/// Largest `min(|M|, |M'|)` found by sampling `samples` general settings
/// and refining the best few.
pub fn probe_simultaneous(
    state: &SpinState,
    model: &SpinModel,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    check_budget(samples, PROBE_TOL)?;
    let obj = Objective {
        state,
        model,
        param: AngleParameterization::General,
        score: |t: &CorrelationTable| t.mermin_signed().abs().min(t.collins_signed().abs()),
    };
    let starts = random_starts(12, samples, seed);
    let mut scored: Vec<(f64, Vec<f64>)> = starts
        .into_par_iter()
        .map(|p| obj.value(&p).map(|v| (v, p)))
        .collect::<Result<_>>()?;
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| lex_cmp(&a.1, &b.1)));
    scored.truncate(PROBE_REFINED);
    Ok(run(
        &obj,
        scored.into_iter().map(|p| p.1).collect(),
        PROBE_TOL,
        PROBE_CAP,
    )?
    .best_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::W_OPTIMAL_POLAR;
    use crate::states::{make, NamedState};
    use std::f64::consts::SQRT_2;

    #[test]
    fn wrap_into_range() {
        assert_eq!(wrap_angle(-0.5), TAU - 0.5);
        assert_eq!(wrap_angle(TAU), 0.0);
        assert!(wrap_angle(-1e-300) < TAU);
        assert_eq!(wrap_angle(1.0), 1.0);
    }

    #[test]
    fn parameterization_shapes() {
        assert!(AngleParameterization::General.settings(&[0.0; 6]).is_err());
        let s = AngleParameterization::SymmetricAzimuth
            .settings(&[PI / 4.0, 3.0 * PI / 4.0])
            .unwrap();
        assert_eq!(s, MeasurementSettings::ghz_optimal());
    }

    #[test]
    fn rejects_bad_budget() {
        let g = make(NamedState::Ghz);
        let p = AngleParameterization::SymmetricAzimuth;
        assert!(maximize(Functional::Svetlichny, &g, &SpinModel::Pauli, p, 0, 1, 1e-9).is_err());
        assert!(maximize(Functional::Svetlichny, &g, &SpinModel::Pauli, p, 1, 1, 0.0).is_err());
    }

    #[test]
    fn ghz_symmetric_svetlichny() {
        let g = make(NamedState::Ghz);
        let r = maximize(
            Functional::Svetlichny,
            &g,
            &SpinModel::Pauli,
            AngleParameterization::SymmetricAzimuth,
            8,
            1,
            1e-9,
        )
        .unwrap();
        assert!((r.best_value - 4.0 * SQRT_2).abs() < 1e-6);
        assert!(r.converged);
        let cos3 = (3.0 * r.best_angles[0]).cos();
        assert!((cos3.abs() - SQRT_2 / 2.0).abs() < 1e-6);
    }

    #[test]
    fn w_symmetric_svetlichny() {
        let w = make(NamedState::W);
        let r = maximize(
            Functional::Svetlichny,
            &w,
            &SpinModel::Pauli,
            AngleParameterization::SymmetricPolar,
            8,
            1,
            1e-9,
        )
        .unwrap();
        assert!((r.best_value - 4.354).abs() < 1e-3);
        assert!((r.best_angles[0] - W_OPTIMAL_POLAR).abs() < 1e-6);
        assert!((r.best_angles[1] - (PI - W_OPTIMAL_POLAR)).abs() < 1e-6);
    }

    #[test]
    fn deterministic_for_seed() {
        let w = make(NamedState::W);
        let go = || {
            maximize(
                Functional::Mermin,
                &w,
                &SpinModel::Pauli,
                AngleParameterization::PlanarPolar,
                3,
                42,
                1e-6,
            )
            .unwrap()
        };
        let a = go();
        let b = go();
        assert_eq!(a.best_value.to_bits(), b.best_value.to_bits());
        assert_eq!(a.best_angles, b.best_angles);
        assert!(a.best_angles.iter().all(|&x| (0.0..TAU).contains(&x)));
    }

    #[test]
    fn probe_is_reproducible() {
        let g = make(NamedState::Ghz);
        let a = probe_simultaneous(&g, &SpinModel::Pauli, 1, 5).unwrap();
        let b = probe_simultaneous(&g, &SpinModel::Pauli, 1, 5).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
        assert!(probe_simultaneous(&g, &SpinModel::Pauli, 0, 5).is_err());
    }
}
