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

//! The `verify` check registry.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closedform as cf;
use crate::error::Result;
use crate::inequalities::{
    correlation, correlation_table, cross_correlation, report, InequalityReport,
    MeasurementSettings, SpinModel, W_OPTIMAL_POLAR,
};
use crate::qcore::{
    apply_local, expectation, inner_product, tensor3, MultiQubitOperator, SingleQubitOperator,
    SpinState,
};
use crate::spinops::{
    azimuthal_direction, boost_state, czachor_along, pauli_along, polar_direction, rotate_spins,
    wigner_angle, wigner_rotation, BoostContext, Direction,
};
use crate::states::{
    boosted_ghz, boosted_w, ghz_high_energy_limit_published, ghz_limit_state, make, w_limit_state,
    GhzBoostCoefficients, NamedState, Regime, WBoostCoefficients,
};

/// How a check's measured error is judged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    /// Compared against the `--tolerance` flag.
    Exact,
    /// Compared against its own threshold, for rounded published values.
    Fixed(f64),
    /// Informational; always passes.
    Report,
}

pub struct Outcome {
    pub error: f64,
    pub detail: String,
}

impl Outcome {
    fn err(error: f64) -> Self {
        Outcome {
            error: error.abs(),
            detail: String::new(),
        }
    }

    fn with(error: f64, detail: String) -> Self {
        Outcome {
            error: error.abs(),
            detail,
        }
    }
}

pub struct Check {
    pub family: &'static str,
    pub name: &'static str,
    pub kind: Kind,
    pub run: fn() -> Result<Outcome>,
}

pub const FAMILIES: [&str; 5] = ["core", "ghz", "w", "tau", "czachor"];

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub family: &'static str,
    pub name: &'static str,
    pub kind: &'static str,
    pub passed: bool,
    pub error: f64,
    pub threshold: Option<f64>,
    pub detail: String,
}

impl Check {
    pub fn evaluate(&self, tolerance: f64) -> CheckRecord {
        let (kind, threshold) = match self.kind {
            Kind::Exact => ("exact", Some(tolerance)),
            Kind::Fixed(t) => ("fixed", Some(t)),
            Kind::Report => ("report", None),
        };
        let (passed, error, detail) = match (self.run)() {
            Ok(o) => {
                let ok = match threshold {
                    Some(t) => o.error <= t,
                    None => true,
                };
                (ok, o.error, o.detail)
            }
            Err(e) => (false, f64::NAN, e.to_string()),
        };
        CheckRecord {
            family: self.family,
            name: self.name,
            kind,
            passed,
            error,
            threshold,
            detail,
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
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

fn triples(n: usize, seed: u64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            [
                rng.random_range(-PI..PI),
                rng.random_range(-PI..PI),
                rng.random_range(-PI..PI),
            ]
        })
        .collect()
}

fn max_abs<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    let mut m = 0.0f64;
    for v in it {
        m = m.max(v?.abs());
    }
    Ok(m)
}

fn gap(a: &InequalityReport, b: &InequalityReport) -> f64 {
    cf::report_gap(a, b)
}

fn az(t: [f64; 3]) -> [Direction; 3] {
    t.map(azimuthal_direction)
}

fn pol(t: [f64; 3]) -> [Direction; 3] {
    t.map(polar_direction)
}

fn corr(state: &SpinState, d: [Direction; 3]) -> Result<f64> {
    correlation(state, &d[0], &d[1], &d[2], &SpinModel::Pauli)
}

/// 100 `(Ω, angles)` points: ten Ω values by ten random triples.
fn omega_angle_grid(seed: u64) -> Vec<(f64, [f64; 3])> {
    let omegas = linspace(0.0, PI, 10);
    let angles = triples(10, seed);
    omegas
        .iter()
        .flat_map(|&o| angles.iter().map(move |&t| (o, t)))
        .collect()
}

fn near_one_limit() -> Result<BoostContext> {
    BoostContext::new(1.0 - 1e-12, 1e6)
}

macro_rules! check {
    ($family:expr, $name:expr, $kind:expr, $body:expr) => {
        Check {
            family: $family,
            name: $name,
            kind: $kind,
            run: $body,
        }
    };
}

use Kind::{Exact, Fixed, Report};

/// Every check, in report order.
pub fn registry() -> Vec<Check> {
    vec![
        // core
        check!(
            "core",
            "tensor product of identities is identity",
            Exact,
            || {
                let i = SingleQubitOperator::identity();
                Ok(Outcome::err(
                    tensor3(&i, &i, &i).max_abs_diff(&MultiQubitOperator::identity(3)?),
                ))
            }
        ),
        check!("core", "ZZZ diagonal sign pattern", Exact, || {
            let z = SingleQubitOperator::pauli_z();
            let op = tensor3(&z, &z, &z);
            let want = [1.0, -1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0];
            let mut e: f64 = 0.0;
            for r in 0..8 {
                for c in 0..8 {
                    let w = if r == c { want[r] } else { 0.0 };
                    e = e.max((op.entry(r, c).re - w).abs() + op.entry(r, c).im.abs());
                }
            }
            Ok(Outcome::err(e))
        }),
        check!("core", "XXX maps |+++> to |--->", Exact, || {
            let x = SingleQubitOperator::pauli_x();
            let out = apply_local(&[x, x, x], &SpinState::basis(3, 0)?)?;
            Ok(Outcome::err(out.max_abs_diff(&SpinState::basis(3, 7)?)))
        }),
        check!("core", "GHZ expectations of XXX and ZZZ", Exact, || {
            let g = make(NamedState::Ghz);
            let x = SingleQubitOperator::pauli_x();
            let z = SingleQubitOperator::pauli_z();
            let a = expectation(&g, &tensor3(&x, &x, &x))? - 1.0;
            let b = expectation(&g, &tensor3(&z, &z, &z))?;
            Ok(Outcome::err(a.abs().max(b.abs())))
        }),
        check!("core", "barred states are orthogonal", Exact, || {
            let a = inner_product(&make(NamedState::Ghz), &make(NamedState::GhzBar))?.norm();
            let b = inner_product(&make(NamedState::W), &make(NamedState::WBar))?.norm();
            Ok(Outcome::err(a.max(b)))
        }),
        check!("core", "rotation by pi maps GHZ to GHZ-bar", Exact, || {
            let r = rotate_spins(&make(NamedState::Ghz), PI)?;
            Ok(Outcome::err(1.0 - r.fidelity(&make(NamedState::GhzBar))?))
        }),
        check!("core", "boosting preserves the norm", Exact, || {
            let g = make(NamedState::Ghz);
            let w = make(NamedState::W);
            let mut e: f64 = 0.0;
            for beta in linspace(0.0, 0.999, 20) {
                for gamma in [1.0, 2.0, 50.0, 1e6] {
                    let ctx = BoostContext::new(beta, gamma)?;
                    e = e.max((boost_state(&g, &ctx)?.norm() - 1.0).abs());
                    e = e.max((boost_state(&w, &ctx)?.norm() - 1.0).abs());
                }
            }
            Ok(Outcome::err(e))
        }),
        check!(
            "core",
            "spin observables have eigenvalues +-1",
            Exact,
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(11);
                let mut e: f64 = 0.0;
                for _ in 0..200 {
                    let a = Direction::spherical(
                        rng.random_range(0.0..PI),
                        rng.random_range(0.0..2.0 * PI),
                    );
                    let m = Direction::spherical(
                        rng.random_range(0.0..PI),
                        rng.random_range(0.0..2.0 * PI),
                    );
                    let speed = rng.random_range(0.0..0.999);
                    e = e.max((pauli_along(&a).det().re + 1.0).abs());
                    e = e.max((czachor_along(&a, speed, &m)?.det() + 1.0).norm());
                }
                Ok(Outcome::err(e))
            }
        ),
        check!(
            "core",
            "Czachor operator at 45 degrees, speed 0.8",
            Fixed(1e-5),
            || {
                let a = Direction::normalize(1.0, 0.0, 1.0)?;
                let op = czachor_along(&a, 0.8, &Direction::Z)?.entries().to_owned();
                let x = op[0][1].re;
                let z = op[0][0].re;
                Ok(Outcome::err((x - 0.51450).abs().max((z - 0.85750).abs())))
            }
        ),
        check!(
            "core",
            "Czachor operator at rest or perpendicular is Pauli",
            Exact,
            || {
                let mut e: f64 = 0.0;
                for (k, t) in triples(20, 12).into_iter().enumerate() {
                    let a = Direction::spherical(t[0], t[1]);
                    let m = Direction::spherical(t[2], 0.3 * k as f64);
                    e = e.max(czachor_along(&a, 0.0, &m)?.max_abs_diff(&pauli_along(&a)));
                }
                let a = azimuthal_direction(0.7);
                e = e.max(czachor_along(&a, 0.95, &Direction::Z)?.max_abs_diff(&pauli_along(&a)));
                Ok(Outcome::err(e))
            }
        ),
        check!(
            "core",
            "Wigner angle at speed 0.6 and energy factor 2",
            Exact,
            || {
                let w = wigner_angle(&BoostContext::new(0.6, 2.0)?);
                Ok(Outcome::err(w - (0.75 * 3f64.sqrt() / 3.25).atan()))
            }
        ),
        check!(
            "core",
            "Wigner angle approaches asin(sqrt(1-1/G^2))",
            Fixed(1e-5),
            || {
                max_abs([1.5, 2.0, 10.0, 50.0].map(|g| {
                    let o = wigner_angle(&BoostContext::new(1.0 - 1e-12, g)?);
                    Ok(o.sin() - (1.0 - 1.0 / (g * g)).sqrt())
                }))
                .map(Outcome::err)
            }
        ),
        check!("core", "Wigner rotations compose additively", Exact, || {
            let mut e: f64 = 0.0;
            for a in linspace(-PI, PI, 15) {
                for b in linspace(-2.0, 3.0, 15) {
                    let p = wigner_rotation(a).matmul(&wigner_rotation(b));
                    e = e.max(p.max_abs_diff(&wigner_rotation(a + b)));
                }
            }
            Ok(Outcome::err(e))
        }),
        // ghz
        check!(
            "ghz",
            "boosted GHZ decomposition matches rotation on 1000 angles",
            Exact,
            || {
                let g = make(NamedState::Ghz);
                max_abs(linspace(0.0, PI, 1000).into_iter().map(|o| {
                    let (s, _) = boosted_ghz(o)?;
                    Ok(s.max_abs_diff(&rotate_spins(&g, o)?))
                }))
                .map(Outcome::err)
            }
        ),
        check!("ghz", "boosted GHZ coefficient norm", Exact, || {
            max_abs(
                linspace(0.0, PI, 1000)
                    .into_iter()
                    .map(|o| Ok(GhzBoostCoefficients::at(o).norm_sq() - 1.0)),
            )
            .map(Outcome::err)
        }),
        check!(
            "ghz",
            "GHZ and GHZ-bar correlators against oracle",
            Exact,
            || {
                let g = make(NamedState::Ghz);
                let gb = make(NamedState::GhzBar);
                max_abs(triples(100, 1).into_iter().flat_map(|t| {
                    [
                        corr(&g, az(t)).map(|v| v - cf::e_ghz(t[0], t[1], t[2])),
                        corr(&gb, az(t)).map(|v| v - cf::e_ghzbar(t[0], t[1], t[2])),
                    ]
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "ghz",
            "boosted GHZ correlator against oracle on 100 points",
            Exact,
            || {
                max_abs(omega_angle_grid(2).into_iter().map(|(o, t)| {
                    let (s, _) = boosted_ghz(o)?;
                    Ok(corr(&s, az(t))? - cf::e_ghz_boosted(o, t[0], t[1], t[2]))
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "ghz",
            "published boosted GHZ correlator (3/4 mixed weight) gap",
            Report,
            || {
                max_abs(omega_angle_grid(2).into_iter().map(|(o, t)| {
                    let (s, _) = boosted_ghz(o)?;
                    Ok(corr(&s, az(t))? - cf::e_ghz_boosted_published(o, t[0], t[1], t[2]))
                }))
                .map(|e| Outcome::with(e, "max |published - oracle| over 100 points".into()))
            }
        ),
        check!(
            "ghz",
            "boosted GHZ inequality values against oracle on 100 angles",
            Exact,
            || {
                let s = MeasurementSettings::ghz_optimal();
                max_abs(linspace(0.0, PI, 100).into_iter().map(|o| {
                    let (st, _) = boosted_ghz(o)?;
                    Ok(gap(
                        &report(&st, &s, &SpinModel::Pauli)?,
                        &cf::ghz_inequalities_boosted(o),
                    ))
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "ghz",
            "GHZ lab Svetlichny value equals 4 sqrt 2",
            Exact,
            || {
                let r = report(
                    &make(NamedState::Ghz),
                    &MeasurementSettings::ghz_optimal(),
                    &SpinModel::Pauli,
                )?;
                Ok(Outcome::err(r.sv - 4.0 * SQRT_2))
            }
        ),
        check!(
            "ghz",
            "GHZ Mermin and Collins equal half the Svetlichny value",
            Exact,
            || {
                let r = report(
                    &make(NamedState::Ghz),
                    &MeasurementSettings::ghz_optimal(),
                    &SpinModel::Pauli,
                )?;
                Ok(Outcome::err(
                    r.half_sv_gap().max((r.m - 2.0 * SQRT_2).abs()),
                ))
            }
        ),
        check!(
            "ghz",
            "maximizing family reaches 4 sqrt 2 for n in -2..=2",
            Exact,
            || {
                let g = make(NamedState::Ghz);
                max_abs((-2..=2).map(|n| {
                    Ok(
                        report(&g, &cf::ghz_maximal_settings(n), &SpinModel::Pauli)?.sv
                            - 4.0 * SQRT_2,
                    )
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "ghz",
            "asymptotic value matches boosted value at sin = sqrt(1-1/G^2)",
            Exact,
            || {
                max_abs([1.0, 1.5, 2.0, 5.0, 10.0, 50.0].map(|g: f64| {
                    let o = (1.0 - 1.0 / (g * g)).sqrt().asin();
                    Ok(cf::ghz_asymptotic(g) - cf::ghz_inequalities_boosted(o).m)
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "ghz",
            "high-energy correlator vanishes",
            Fixed(1e-3),
            || {
                let o = near_one_limit()?.wigner_angle();
                let q = FRAC_PI_4;
                Ok(Outcome::err(cf::e_ghz_boosted(o, q, q, q)))
            }
        ),
        check!(
            "ghz",
            "boosted GHZ approaches the high-energy limit state",
            Fixed(1e-3),
            || {
                let b = boost_state(&make(NamedState::Ghz), &near_one_limit()?)?;
                Ok(Outcome::err(
                    1.0 - b.fidelity(&ghz_limit_state(Regime::HighEnergy))?,
                ))
            }
        ),
        check!(
            "ghz",
            "published high-energy GHZ limit, normalized, fidelity gap",
            Report,
            || {
                let exact = ghz_limit_state(Regime::HighEnergy);
                let f = exact.fidelity(&ghz_high_energy_limit_published())?;
                Ok(Outcome::with(1.0 - f, format!("fidelity {f}")))
            }
        ),
        check!("ghz", "low-energy GHZ limit is GHZ", Exact, || {
            let b = boost_state(&make(NamedState::Ghz), &BoostContext::new(0.999, 1.0)?)?;
            Ok(Outcome::err(
                1.0 - b.fidelity(&ghz_limit_state(Regime::LowEnergy))?,
            ))
        }),
        // w
        check!(
            "w",
            "boosted W decomposition matches rotation on 1000 angles",
            Exact,
            || {
                let w = make(NamedState::W);
                max_abs(linspace(0.0, PI, 1000).into_iter().map(|o| {
                    let (s, _) = boosted_w(o)?;
                    Ok(s.max_abs_diff(&rotate_spins(&w, o)?))
                }))
                .map(Outcome::err)
            }
        ),
        check!("w", "boosted W coefficient norm", Exact, || {
            max_abs(
                linspace(0.0, PI, 1000)
                    .into_iter()
                    .map(|o| Ok(WBoostCoefficients::at(o).norm_sq() - 1.0)),
            )
            .map(Outcome::err)
        }),
        check!("w", "W and W-bar correlators against oracle", Exact, || {
            let w = make(NamedState::W);
            let wb = make(NamedState::WBar);
            max_abs(triples(100, 3).into_iter().flat_map(|t| {
                [
                    corr(&w, pol(t)).map(|v| v - cf::e_w(t[0], t[1], t[2])),
                    corr(&wb, pol(t)).map(|v| v - cf::e_wbar(t[0], t[1], t[2])),
                ]
            }))
            .map(Outcome::err)
        }),
        check!(
            "w",
            "published W-bar correlator (equal to W) gap",
            Report,
            || {
                let wb = make(NamedState::WBar);
                max_abs(
                    triples(100, 3)
                        .into_iter()
                        .map(|t| Ok(corr(&wb, pol(t))? - cf::e_wbar_published(t[0], t[1], t[2]))),
                )
                .map(|e| Outcome::with(e, "max |published - oracle| over 100 points".into()))
            }
        ),
        check!(
            "w",
            "boosted W correlator against oracle on 100 points",
            Exact,
            || {
                max_abs(omega_angle_grid(4).into_iter().map(|(o, t)| {
                    let (s, _) = boosted_w(o)?;
                    Ok(corr(&s, pol(t))? - cf::e_w_boosted(o, t[0], t[1], t[2]))
                }))
                .map(Outcome::err)
            }
        ),
        check!("w", "published boosted W coefficients gap", Report, || {
            max_abs(omega_angle_grid(4).into_iter().map(|(o, t)| {
                let (s, _) = boosted_w(o)?;
                Ok(corr(&s, pol(t))? - cf::e_w_boosted_published(o, t[0], t[1], t[2]))
            }))
            .map(|e| Outcome::with(e, "max |published - oracle| over 100 points".into()))
        }),
        check!(
            "w",
            "W coefficients at rest reduce to the lab correlator",
            Exact,
            || {
                let k = cf::w_coefficients(0.0);
                let e = (k.a + 1.0 / 3.0)
                    .abs()
                    .max(k.b.abs())
                    .max((k.c + 2.0 / 3.0).abs())
                    .max(k.d.abs());
                Ok(Outcome::err(e))
            }
        ),
        check!("w", "W lab Svetlichny value is 4.354", Fixed(5e-3), || {
            let t = 35.264f64.to_radians();
            let s = MeasurementSettings::symmetric_polar(t, PI - t);
            Ok(Outcome::err(
                report(&make(NamedState::W), &s, &SpinModel::Pauli)?.sv - 4.354,
            ))
        }),
        check!(
            "w",
            "W Mermin and Collins equal half the Svetlichny value",
            Exact,
            || {
                let r = report(
                    &make(NamedState::W),
                    &MeasurementSettings::w_optimal(),
                    &SpinModel::Pauli,
                )?;
                Ok(Outcome::err(r.half_sv_gap()))
            }
        ),
        check!(
            "w",
            "boosted W inequality values against oracle on 100 points",
            Exact,
            || {
                let omegas = linspace(0.0, PI, 10);
                let thetas = linspace(0.05, 3.0, 10);
                let rows = cf::w_misprint_report(&omegas, &thetas)?;
                Ok(Outcome::err(
                    rows.iter().map(|r| r.exact_gap()).fold(0.0, f64::max),
                ))
            }
        ),
        check!(
            "w",
            "published |M| formula against oracle on 20 points",
            Report,
            || {
                let rows = cf::w_misprint_report(&linspace(0.1, 1.5, 5), &linspace(0.2, 1.2, 4))?;
                let e = rows.iter().map(|r| r.published_m_gap()).fold(0.0, f64::max);
                Ok(Outcome::with(
                    e,
                    format!("max |published - oracle| over {} points", rows.len()),
                ))
            }
        ),
        check!(
            "w",
            "oracle-backed |M| formula against oracle on 20 points",
            Exact,
            || {
                let rows = cf::w_misprint_report(&linspace(0.1, 1.5, 5), &linspace(0.2, 1.2, 4))?;
                Ok(Outcome::err(
                    rows.iter().map(|r| r.exact_gap()).fold(0.0, f64::max),
                ))
            }
        ),
        check!(
            "w",
            "limit coefficients match published coefficients at cos = 1/G",
            Exact,
            || {
                max_abs([1.0, 2.0, 5.0, 50.0].map(|g: f64| {
                    let p = cf::w_coefficients_published((1.0 / g).acos());
                    let l = cf::w_coefficient_limits(g);
                    Ok((p.a - l.a)
                        .abs()
                        .max((p.b - l.b).abs())
                        .max((p.c - l.c).abs()))
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "w",
            "asymptotic W Svetlichny value at G = 1",
            Fixed(1e-2),
            || { Ok(Outcome::err(cf::w_asymptotic(1.0).sv - 4.354)) }
        ),
        check!(
            "w",
            "asymptotic W values as G grows: sv to 0, m to 2.50",
            Fixed(1e-2),
            || {
                let r = cf::w_asymptotic(1e9);
                let e =
                    r.sv.abs()
                        .max((r.m - 2.50).abs())
                        .max((r.m_prime - 2.50).abs());
                Ok(Outcome::with(
                    e,
                    format!("sv {} m {} m' {}", r.sv, r.m, r.m_prime),
                ))
            }
        ),
        check!(
            "w",
            "boosted W approaches the high-energy limit state",
            Fixed(1e-3),
            || {
                let b = boost_state(&make(NamedState::W), &near_one_limit()?)?;
                Ok(Outcome::err(
                    1.0 - b.fidelity(&w_limit_state(Regime::HighEnergy))?,
                ))
            }
        ),
        // tau
        check!(
            "tau",
            "W / W-bar cross correlator against oracle",
            Exact,
            || {
                let w = make(NamedState::W);
                let wb = make(NamedState::WBar);
                max_abs(triples(100, 5).into_iter().map(|t| {
                    let d = pol(t);
                    Ok(cross_correlation(&w, &wb, &d[0], &d[1], &d[2])?
                        - cf::e_w_wbar(t[0], t[1], t[2]))
                }))
                .map(Outcome::err)
            }
        ),
        check!("tau", "tau correlator against oracle", Exact, || {
            let tau = make(NamedState::Tau);
            max_abs(
                triples(100, 6)
                    .into_iter()
                    .map(|t| Ok(corr(&tau, pol(t))? - cf::e_tau(t[0], t[1], t[2]))),
            )
            .map(Outcome::err)
        }),
        check!("tau", "published tau correlator gap", Report, || {
            let tau = make(NamedState::Tau);
            max_abs(
                triples(100, 6)
                    .into_iter()
                    .map(|t| Ok(corr(&tau, pol(t))? - cf::e_tau_published(t[0], t[1], t[2]))),
            )
            .map(|e| Outcome::with(e, "max |published - oracle| over 100 points".into()))
        }),
        check!(
            "tau",
            "delta E at the W optimum is 0.577",
            Fixed(1e-3),
            || {
                let t = 35.264f64.to_radians();
                Ok(Outcome::err(cf::delta_e(t, t, t) - 0.57735))
            }
        ),
        check!(
            "tau",
            "delta E positive within 5 degrees of the optimum",
            Exact,
            || {
                let mut lowest = f64::INFINITY;
                for a in linspace(-5.0, 5.0, 11) {
                    for b in linspace(-5.0, 5.0, 11) {
                        for c in linspace(-5.0, 5.0, 11) {
                            let t = |d: f64| W_OPTIMAL_POLAR + d.to_radians();
                            lowest = lowest.min(cf::delta_e(t(a), t(b), t(c)));
                        }
                    }
                }
                let e = if lowest > 0.0 { 0.0 } else { 1.0 - lowest };
                Ok(Outcome::with(e, format!("minimum {lowest}")))
            }
        ),
        check!("tau", "published tau minus W equals delta E", Exact, || {
            max_abs(triples(100, 7).into_iter().map(|t| {
                let (a, b, c) = (t[0], t[1], t[2]);
                Ok(cf::e_tau_published(a, b, c) - cf::e_w(a, b, c) - cf::delta_e(a, b, c))
            }))
            .map(Outcome::err)
        }),
        // czachor
        check!("czachor", "Czachor GHZ values at rest", Exact, || {
            let r = cf::czachor_ghz_inequalities(0.0, 0.0);
            let want = InequalityReport::from_values(4.0 * SQRT_2, 2.0 * SQRT_2, 2.0 * SQRT_2);
            Ok(Outcome::err(gap(&r, &want)))
        }),
        check!(
            "czachor",
            "Czachor GHZ closed form against oracle",
            Exact,
            || {
                let g = make(NamedState::Ghz);
                let s = MeasurementSettings::ghz_optimal();
                let mut pts = Vec::new();
                for beta in linspace(0.0, 0.99, 12) {
                    for gamma in [1.0, 1.5, 2.0, 5.0, 20.0] {
                        pts.push((beta, gamma));
                    }
                }
                max_abs(pts.into_iter().map(|(beta, gamma)| {
                    let ctx = BoostContext::new(beta, gamma)?;
                    let st = boost_state(&g, &ctx)?;
                    let model = SpinModel::czachor(beta, Direction::X)?;
                    let num = report(&st, &s, &model)?;
                    Ok(gap(
                        &num,
                        &cf::czachor_ghz_inequalities(beta, ctx.wigner_angle()),
                    ))
                }))
                .map(Outcome::err)
            }
        ),
        check!(
            "czachor",
            "Czachor model at zero speed reproduces Pauli values",
            Exact,
            || {
                let model = SpinModel::czachor(0.0, Direction::X)?;
                let states = [
                    make(NamedState::Ghz),
                    make(NamedState::W),
                    make(NamedState::Tau),
                ];
                let mut e: f64 = 0.0;
                for st in &states {
                    for t in triples(10, 8) {
                        let s = MeasurementSettings::polar(t, [t[1], t[2], t[0] + 0.4]);
                        let a = correlation_table(st, &s, &model)?;
                        let b = correlation_table(st, &s, &SpinModel::Pauli)?;
                        e = e.max(gap(
                            &InequalityReport::from_table(&a),
                            &InequalityReport::from_table(&b),
                        ));
                    }
                }
                Ok(Outcome::err(e))
            }
        ),
        check!(
            "czachor",
            "Czachor |M| at speed 0.9999 relative to 2/G^3",
            Report,
            || {
                let mut worst: f64 = 0.0;
                let mut parts = Vec::new();
                for g in [2.0f64, 5.0, 10.0] {
                    let ctx = BoostContext::new(0.9999, g)?;
                    let m = cf::czachor_ghz_inequalities(0.9999, ctx.wigner_angle()).m;
                    let rel = m / (2.0 / g.powi(3)) - 1.0;
                    worst = worst.max(rel.abs());
                    parts.push(format!("G={g}: {:+.2}%", 100.0 * rel));
                }
                Ok(Outcome::with(worst, parts.join(", ")))
            }
        ),
        check!(
            "czachor",
            "Czachor GHZ value at right-angle rotation vanishes",
            Exact,
            || {
                Ok(Outcome::err(
                    cf::czachor_ghz_inequalities(0.5, FRAC_PI_2).sv,
                ))
            }
        ),
    ]
}
