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

//! Closed-form correlators and inequality values for boosted GHZ and W
//! states.
//!
//! Where a published expression and the brute-force evaluation disagree, the
//! oracle-consistent version carries the plain name and the published one is
//! kept under a `_published` suffix so the gap can be reported.

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::Result;
use crate::inequalities::{correlation_table, InequalityReport, MeasurementSettings, SpinModel};
use crate::states::boosted_w;

fn half_angle(omega: f64) -> (f64, f64) {
    let (s, c) = (omega / 2.0).sin_cos();
    (c, s)
}

/// `cos(φ₁+φ₂+φ₃)`
pub fn e_ghz(phi1: f64, phi2: f64, phi3: f64) -> f64 {
    (phi1 + phi2 + phi3).cos()
}

/// `-(1/3)Πcosθᵢ - (2/3)cos(Σθᵢ)`
pub fn e_w(th1: f64, th2: f64, th3: f64) -> f64 {
    -(th1.cos() * th2.cos() * th3.cos()) / 3.0 - 2.0 * (th1 + th2 + th3).cos() / 3.0
}

pub fn e_ghzbar(phi1: f64, phi2: f64, phi3: f64) -> f64 {
    -e_ghz(phi1, phi2, phi3)
}

/// Correlator of W̄ for polar settings, `-E_W`.
pub fn e_wbar(th1: f64, th2: f64, th3: f64) -> f64 {
    -e_w(th1, th2, th3)
}

/// Published form, identical to `E_W`.
pub fn e_wbar_published(th1: f64, th2: f64, th3: f64) -> f64 {
    e_w(th1, th2, th3)
}

fn ghz_mixed_sum(phi1: f64, phi2: f64, phi3: f64) -> f64 {
    (phi1 + phi2 - phi3).cos() + (phi1 - phi2 + phi3).cos() + (-phi1 + phi2 + phi3).cos()
}

fn ghz_boosted_with(mixed: f64, omega: f64, phi1: f64, phi2: f64, phi3: f64) -> f64 {
    let (c, s) = half_angle(omega);
    let lead = c.powi(6) - s.powi(6);
    let (so, co) = omega.sin_cos();
    lead * e_ghz(phi1, phi2, phi3) - mixed * so * so * co * ghz_mixed_sum(phi1, phi2, phi3)
}

/// Boosted GHZ correlator for azimuthal settings:
/// `(c⁶-s⁶)cos(Σφ) - (1/4)sin²Ω cosΩ Σ cos(φᵢ+φⱼ-φₖ)`.
pub fn e_ghz_boosted(omega: f64, phi1: f64, phi2: f64, phi3: f64) -> f64 {
    ghz_boosted_with(0.25, omega, phi1, phi2, phi3)
}

/// Published form with mixed-term weight `3/4`.
pub fn e_ghz_boosted_published(omega: f64, phi1: f64, phi2: f64, phi3: f64) -> f64 {
    ghz_boosted_with(0.75, omega, phi1, phi2, phi3)
}

/// `|M| = |M'| = |S_v|/2 = 2√2 |c⁶ - s⁶|` at the lab-optimal GHZ settings.
pub fn ghz_inequalities_boosted(omega: f64) -> InequalityReport {
    let (c, s) = half_angle(omega);
    let m = (2.0 * SQRT_2 * (c.powi(6) - s.powi(6))).abs();
    InequalityReport::from_values(2.0 * m, m, m)
}

/// `(1 + 3Γ²) / (√2 Γ³)`, the ultra-relativistic `|M|`.
pub fn ghz_asymptotic(gamma: f64) -> f64 {
    (1.0 + 3.0 * gamma * gamma) / (SQRT_2 * gamma.powi(3))
}

/// Czachor-operator values for boosted GHZ:
/// `|M| = 2|cosΩ|(cos²Ω + 3(1-β²)) / (2-β²)^(3/2)`.
pub fn czachor_ghz_inequalities(beta: f64, omega: f64) -> InequalityReport {
    let co = omega.cos();
    let one_minus = (1.0 - beta) * (1.0 + beta);
    let m = 2.0 * co.abs() * (co * co + 3.0 * one_minus) / (1.0 + one_minus).powf(1.5);
    InequalityReport::from_values(2.0 * m, m, m)
}

/// Coefficients of the boosted W correlator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl WCoefficients {
    /// `A ΠcosΘ + B ΠsinΘ + C cos(ΣΘ) + D(c₁s₂c₃ + s₁c₂c₃ + c₁c₂s₃)`.
    pub fn correlation(&self, th1: f64, th2: f64, th3: f64) -> f64 {
        let (s1, c1) = th1.sin_cos();
        let (s2, c2) = th2.sin_cos();
        let (s3, c3) = th3.sin_cos();
        self.a * c1 * c2 * c3
            + self.b * s1 * s2 * s3
            + self.c * (th1 + th2 + th3).cos()
            + self.d * (c1 * s2 * c3 + s1 * c2 * c3 + c1 * c2 * s3)
    }

    /// Symmetric settings `θᵢ = θ`, `θ'ᵢ = π - θ`, with the B term raised
    /// to `sine_power` in `M` and `M'`.
    fn inequalities(&self, theta: f64, sine_power: i32) -> InequalityReport {
        let (s, c) = theta.sin_cos();
        let cc = self.c * ((3.0 * theta).cos() - 3.0 * c);
        let base = -2.0 * self.a * c.powi(3) + cc;
        let odd = 2.0 * self.b * s.powi(sine_power) - 6.0 * self.d * c * c * s;
        let sv = -4.0 * self.a * c.powi(3) + 2.0 * self.c * (3.0 * theta).cos() - 6.0 * self.c * c;
        InequalityReport::from_values(sv.abs(), (base + odd).abs(), (base - odd).abs())
    }
}

/// Boosted W coefficients consistent with rotating every polar angle by `Ω`.
pub fn w_coefficients(omega: f64) -> WCoefficients {
    let (s, c) = omega.sin_cos();
    WCoefficients {
        a: -c / 3.0,
        b: s * (2.0 * c * c - s * s),
        c: 7.0 / 3.0 * s * s * c - 2.0 / 3.0 * c.powi(3),
        d: s * (-7.0 / 3.0 * c * c + 2.0 / 3.0 * s * s),
    }
}

/// Coefficients exactly as published.
pub fn w_coefficients_published(omega: f64) -> WCoefficients {
    let (s, c) = omega.sin_cos();
    WCoefficients {
        a: -c.powi(3) / 3.0 + 7.0 / 6.0 * s * s * c,
        b: s * (2.0 * c * c - s * s),
        c: 7.0 / 3.0 * s * s * c - 2.0 / 3.0 * c.powi(3),
        d: s * (-7.0 / 3.0 * c * c + 2.0 / 3.0 * s.powi(3)),
    }
}

/// Published `β → 1` limits of the coefficients as functions of `Γ`.
pub fn w_coefficient_limits(gamma: f64) -> WCoefficients {
    let root = (1.0 - 1.0 / (gamma * gamma)).sqrt();
    let g2 = gamma * gamma;
    let g3 = g2 * gamma;
    WCoefficients {
        a: -3.0 / (2.0 * g3) + 7.0 / (6.0 * gamma),
        b: root * (3.0 / g2 - 1.0),
        c: -3.0 / g3 + 7.0 / (3.0 * gamma),
        d: root * (-3.0 / g2 + 2.0 / 3.0),
    }
}

pub fn e_w_boosted(omega: f64, th1: f64, th2: f64, th3: f64) -> f64 {
    w_coefficients(omega).correlation(th1, th2, th3)
}

pub fn e_w_boosted_published(omega: f64, th1: f64, th2: f64, th3: f64) -> f64 {
    w_coefficients_published(omega).correlation(th1, th2, th3)
}

/// Boosted W values at `θᵢ = θ`, `θ'ᵢ = π - θ` (cubic B term).
pub fn w_inequalities_boosted(omega: f64, theta: f64) -> InequalityReport {
    w_coefficients(omega).inequalities(theta, 3)
}

/// Published form: published coefficients and a squared B term.
pub fn w_inequalities_published(omega: f64, theta: f64) -> InequalityReport {
    w_coefficients_published(omega).inequalities(theta, 2)
}

/// Published ultra-relativistic W values with their rounded decimals.
pub fn w_asymptotic(gamma: f64) -> InequalityReport {
    let g3 = gamma.powi(3);
    let lead = 9.797 / g3 - 7.620 / gamma;
    let corr = 1.14 * (1.0 - 1.0 / (gamma * gamma)).sqrt() * (9.0 / (gamma * gamma) - 2.19);
    let sv = (19.594 / g3 - 15.236 / gamma).abs();
    InequalityReport::from_values(sv, (lead + corr).abs(), (lead - corr).abs())
}

fn sin_sum_prod(th1: f64, th2: f64, th3: f64) -> (f64, f64) {
    ((th1 + th2 + th3).sin(), th1.sin() * th2.sin() * th3.sin())
}

/// `Re <W| σ⊗σ⊗σ |W̄>` = `-(2/3)sin(Σθ) + (1/3)Πsinθᵢ`.
pub fn e_w_wbar(th1: f64, th2: f64, th3: f64) -> f64 {
    let (ss, ps) = sin_sum_prod(th1, th2, th3);
    -2.0 / 3.0 * ss + ps / 3.0
}

/// Correlator of `τ = (W̄ - W)/√2`, equal to `-E_WW̄`.
pub fn e_tau(th1: f64, th2: f64, th3: f64) -> f64 {
    -e_w_wbar(th1, th2, th3)
}

/// Published form `E_W - E_WW̄`.
pub fn e_tau_published(th1: f64, th2: f64, th3: f64) -> f64 {
    e_w(th1, th2, th3) - e_w_wbar(th1, th2, th3)
}

/// `-(1/3)Πsinθᵢ + (2/3)sin(Σθ)`
pub fn delta_e(th1: f64, th2: f64, th3: f64) -> f64 {
    let (ss, ps) = sin_sum_prod(th1, th2, th3);
    -ps / 3.0 + 2.0 / 3.0 * ss
}

/// Symmetric azimuthal settings on the maximizing family
/// `Σφ = (n + 3/4)π`, `Σφ' = (n + 9/4)π`.
pub fn ghz_maximal_settings(n: i32) -> MeasurementSettings {
    let n = f64::from(n);
    MeasurementSettings::symmetric_azimuthal((n + 0.75) * PI / 3.0, (n + 2.25) * PI / 3.0)
}

/// One grid point comparing the published W inequality values with the
/// brute-force evaluation of the boosted W state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MisprintRow {
    pub omega: f64,
    pub theta: f64,
    pub oracle: InequalityReport,
    pub exact: InequalityReport,
    pub published: InequalityReport,
}

impl MisprintRow {
    /// Largest `|closed - oracle|` over `sv`, `m`, `m'` for the exact form.
    pub fn exact_gap(&self) -> f64 {
        report_gap(&self.exact, &self.oracle)
    }

    /// Largest gap of the published `|M|` and `|M'|`.
    pub fn published_m_gap(&self) -> f64 {
        (self.published.m - self.oracle.m)
            .abs()
            .max((self.published.m_prime - self.oracle.m_prime).abs())
    }
}

/// `max(|Δsv|, |Δm|, |Δm'|)`.
pub fn report_gap(a: &InequalityReport, b: &InequalityReport) -> f64 {
    (a.sv - b.sv)
        .abs()
        .max((a.m - b.m).abs())
        .max((a.m_prime - b.m_prime).abs())
}

pub fn w_misprint_row(omega: f64, theta: f64) -> Result<MisprintRow> {
    let (state, _) = boosted_w(omega)?;
    let s = MeasurementSettings::symmetric_polar(theta, PI - theta);
    let oracle = InequalityReport::from_table(&correlation_table(&state, &s, &SpinModel::Pauli)?);
    Ok(MisprintRow {
        omega,
        theta,
        oracle,
        exact: w_inequalities_boosted(omega, theta),
        published: w_inequalities_published(omega, theta),
    })
}

/// Misprint comparison over the Cartesian grid `omegas × thetas`.
pub fn w_misprint_report(omegas: &[f64], thetas: &[f64]) -> Result<Vec<MisprintRow>> {
    let mut rows = Vec::with_capacity(omegas.len() * thetas.len());
    for &o in omegas {
        for &t in thetas {
            rows.push(w_misprint_row(o, t)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::W_OPTIMAL_POLAR;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn lab_correlators() {
        assert!(close(
            e_ghz(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4),
            -SQRT_2 / 2.0,
            1e-15
        ));
        assert_eq!(e_w(0.0, 0.0, 0.0), -1.0);
        for (a, b, c) in [(0.1, 0.2, 0.3), (1.0, -2.0, 0.5)] {
            assert_eq!(e_ghzbar(a, b, c), -e_ghz(a, b, c));
            assert_eq!(e_wbar(a, b, c), -e_w(a, b, c));
        }
    }

    #[test]
    fn ghz_boosted_reduces_at_rest() {
        for p in [(0.3, 0.1, 2.0), (FRAC_PI_4, FRAC_PI_4, FRAC_PI_4)] {
            assert!(close(
                e_ghz_boosted(0.0, p.0, p.1, p.2),
                e_ghz(p.0, p.1, p.2),
                1e-15
            ));
        }
        assert!(e_ghz_boosted(FRAC_PI_2, 0.2, 0.3, 0.9).abs() < 1e-15);
    }

    #[test]
    fn ghz_inequality_examples() {
        assert!(close(ghz_inequalities_boosted(0.0).sv, 4.0 * SQRT_2, 1e-15));
        assert!(ghz_inequalities_boosted(FRAC_PI_2).sv < 1e-15);
        let r = ghz_inequalities_boosted(FRAC_PI_3);
        assert!(close(r.m, 2.0 * SQRT_2 * 26.0 / 64.0, 1e-15));
        assert!(close(r.sv, 2.29810, 1e-5));
    }

    #[test]
    fn ghz_asymptotic_examples() {
        assert!(close(ghz_asymptotic(1.0), 2.0 * SQRT_2, 1e-15));
        assert!(close(ghz_asymptotic(2.0), 13.0 / (8.0 * SQRT_2), 1e-15));
        assert!(close(
            ghz_asymptotic(2.0),
            ghz_inequalities_boosted(FRAC_PI_3).m,
            1e-12
        ));
        assert!(ghz_asymptotic(1e6) < 1e-5);
    }

    #[test]
    fn czachor_examples() {
        let r = czachor_ghz_inequalities(0.0, 0.0);
        assert!(close(r.sv, 4.0 * SQRT_2, 1e-15) && close(r.m, 2.0 * SQRT_2, 1e-15));
        let omega = crate::spinops::BoostContext::new(0.6, 2.0)
            .unwrap()
            .wigner_angle();
        let v = czachor_ghz_inequalities(0.6, omega).m;
        assert!(v < 2.0 * SQRT_2 && v > 0.25);
    }

    #[test]
    fn w_coefficient_examples() {
        let k = w_coefficients(0.0);
        assert_eq!((k.a, k.b, k.c, k.d), (-1.0 / 3.0, 0.0, -2.0 / 3.0, 0.0));
        assert_eq!(w_coefficients_published(0.0), k);
        let k = w_coefficients(FRAC_PI_2);
        assert!(k.a.abs() < 1e-16 && close(k.b, -1.0, 1e-15));
        assert!(k.c.abs() < 1e-15 && close(k.d, 2.0 / 3.0, 1e-15));
        let l = w_coefficient_limits(1.0);
        assert!(close(l.a, -1.0 / 3.0, 1e-15) && close(l.c, -2.0 / 3.0, 1e-15));
    }

    #[test]
    fn limits_track_published_coefficients() {
        for gamma in [1.5f64, 3.0, 20.0] {
            let omega = (1.0 / gamma).acos();
            let p = w_coefficients_published(omega);
            let l = w_coefficient_limits(gamma);
            assert!(close(p.a, l.a, 1e-12) && close(p.b, l.b, 1e-12) && close(p.c, l.c, 1e-12));
        }
    }

    #[test]
    fn w_inequality_examples() {
        let t = 35.264f64.to_radians();
        let r = w_inequalities_boosted(0.0, t);
        assert!(close(r.sv, 4.3546, 5e-4));
        assert!(close(r.m, 2.17732, 1e-4) && close(r.m_prime, 2.17732, 1e-4));
        assert!(w_inequalities_boosted(FRAC_PI_2, 0.7).sv < 1e-15);
        assert_eq!(
            w_inequalities_published(0.0, W_OPTIMAL_POLAR).sv,
            w_inequalities_boosted(0.0, W_OPTIMAL_POLAR).sv
        );
    }

    #[test]
    fn w_asymptotic_examples() {
        let r = w_asymptotic(1.0);
        assert!(close(r.sv, 4.358, 1e-12) && r.m == r.m_prime);
        let r = w_asymptotic(1e8);
        assert!(r.sv < 1e-6 && close(r.m, 1.14 * 2.19, 1e-6) && close(r.m_prime, 2.4966, 1e-4));
    }

    #[test]
    fn tau_and_delta() {
        let t = 35.264f64.to_radians();
        assert!(close(delta_e(t, t, t), 0.57735, 1e-4));
        assert_eq!(delta_e(0.0, 0.0, 0.0), 0.0);
        for p in [(0.1, 0.5, 1.0), (2.0, -1.0, 0.3)] {
            assert!(close(
                e_tau_published(p.0, p.1, p.2) - e_w(p.0, p.1, p.2),
                delta_e(p.0, p.1, p.2),
                1e-15
            ));
            assert!(close(e_tau(p.0, p.1, p.2), delta_e(p.0, p.1, p.2), 1e-15));
        }
    }

    #[test]
    fn maximal_settings_family() {
        assert_eq!(ghz_maximal_settings(0), MeasurementSettings::ghz_optimal());
        let s = ghz_maximal_settings(1);
        let phi = s.a.y().atan2(s.a.x());
        assert!(close((3.0 * phi).cos(), (1.75 * PI).cos(), 1e-12));
    }

    #[test]
    fn misprint_rows() {
        let row = w_misprint_row(0.7, 0.5).unwrap();
        assert!(row.exact_gap() < 1e-12);
        assert!(row.published_m_gap() > 1e-3);
    }
}
