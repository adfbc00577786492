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

//! Brute-force evaluation of three-particle correlators and of the
//! Svetlichny, Mermin and Collins functionals for arbitrary states.
//!
//! Every correlator is `<ψ| O₁ ⊗ O₂ ⊗ O₃ |ψ>` on the dense 8x8 Kronecker
//! product; nothing here relies on a closed form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{expectation, matrix_element, tensor3, SingleQubitOperator, SpinState};
use crate::spinops::{azimuthal_direction, czachor_along, pauli_along, polar_direction, Direction};

/// Local-realistic bound of the Svetlichny functional.
pub const SV_BOUND: f64 = 4.0;
/// Local-realistic bound of the Mermin and Collins functionals.
pub const M_BOUND: f64 = 2.0;
/// Largest quantum value of the Svetlichny functional, `4√2`.
pub const SV_QUANTUM_BOUND: f64 = 4.0 * std::f64::consts::SQRT_2;

/// Margin a value must clear above its bound to be flagged as a violation,
/// so that round-off on a saturated bound does not register.
pub const VIOLATION_TOL: f64 = 1e-12;

/// `atan(1/√2)` ≈ 35.264°, the polar setting maximizing the W-state
/// Svetlichny value.
pub const W_OPTIMAL_POLAR: f64 = 0.615_479_708_670_387_3;

/// Two candidate measurement directions per particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSettings {
    pub a: Direction,
    pub a_prime: Direction,
    pub b: Direction,
    pub b_prime: Direction,
    pub c: Direction,
    pub c_prime: Direction,
}

impl MeasurementSettings {
    pub fn new(
        a: Direction,
        a_prime: Direction,
        b: Direction,
        b_prime: Direction,
        c: Direction,
        c_prime: Direction,
    ) -> Self {
        MeasurementSettings {
            a,
            a_prime,
            b,
            b_prime,
            c,
            c_prime,
        }
    }

    /// Per-particle azimuths in the x-y plane.
    pub fn azimuthal(phi: [f64; 3], phi_prime: [f64; 3]) -> Self {
        let d = azimuthal_direction;
        Self::new(
            d(phi[0]),
            d(phi_prime[0]),
            d(phi[1]),
            d(phi_prime[1]),
            d(phi[2]),
            d(phi_prime[2]),
        )
    }

    /// Per-particle polar angles in the x-z plane.
    pub fn polar(theta: [f64; 3], theta_prime: [f64; 3]) -> Self {
        let d = polar_direction;
        Self::new(
            d(theta[0]),
            d(theta_prime[0]),
            d(theta[1]),
            d(theta_prime[1]),
            d(theta[2]),
            d(theta_prime[2]),
        )
    }

    pub fn symmetric_azimuthal(phi: f64, phi_prime: f64) -> Self {
        Self::azimuthal([phi; 3], [phi_prime; 3])
    }

    pub fn symmetric_polar(theta: f64, theta_prime: f64) -> Self {
        Self::polar([theta; 3], [theta_prime; 3])
    }

    /// `φ = π/4`, `φ' = 3π/4` on every particle.
    pub fn ghz_optimal() -> Self {
        use std::f64::consts::FRAC_PI_4;
        Self::symmetric_azimuthal(FRAC_PI_4, 3.0 * FRAC_PI_4)
    }

    /// `θ = atan(1/√2)`, `θ' = π - θ` on every particle.
    pub fn w_optimal() -> Self {
        Self::symmetric_polar(W_OPTIMAL_POLAR, std::f64::consts::PI - W_OPTIMAL_POLAR)
    }

    /// `[particle][primed]`.
    pub fn by_particle(&self) -> [[Direction; 2]; 3] {
        [
            [self.a, self.a_prime],
            [self.b, self.b_prime],
            [self.c, self.c_prime],
        ]
    }
}

/// Spin observable used by every party.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpinModel {
    Pauli,
    /// Czachor's operator with one speed and direction of motion shared by
    /// all three particles.
    Czachor {
        particle_speed: f64,
        motion: Direction,
    },
}

impl SpinModel {
    pub fn czachor(particle_speed: f64, motion: Direction) -> Result<Self> {
        // validate once up front
        czachor_along(&motion, particle_speed, &motion)?;
        Ok(SpinModel::Czachor {
            particle_speed,
            motion,
        })
    }

    pub fn operator(&self, d: &Direction) -> Result<SingleQubitOperator> {
        match self {
            SpinModel::Pauli => Ok(pauli_along(d)),
            SpinModel::Czachor {
                particle_speed,
                motion,
            } => czachor_along(d, *particle_speed, motion),
        }
    }
}

fn require_three(state: &SpinState) -> Result<()> {
    if state.qubit_count() != 3 {
        return Err(Error::QubitCount {
            expected: 3,
            found: state.qubit_count(),
        });
    }
    Ok(())
}

/// `E = <ψ| O(d1) ⊗ O(d2) ⊗ O(d3) |ψ>` under `model`.
pub fn correlation(
    state: &SpinState,
    d1: &Direction,
    d2: &Direction,
    d3: &Direction,
    model: &SpinModel,
) -> Result<f64> {
    require_three(state)?;
    let op = tensor3(
        &model.operator(d1)?,
        &model.operator(d2)?,
        &model.operator(d3)?,
    );
    expectation(state, &op)
}

/// `Re <bra| σ(d1) ⊗ σ(d2) ⊗ σ(d3) |ket>` with Pauli operators.
pub fn cross_correlation(
    bra: &SpinState,
    ket: &SpinState,
    d1: &Direction,
    d2: &Direction,
    d3: &Direction,
) -> Result<f64> {
    require_three(bra)?;
    require_three(ket)?;
    let op = tensor3(&pauli_along(d1), &pauli_along(d2), &pauli_along(d3));
    Ok(matrix_element(bra, &op, ket)?.re)
}

/// The eight correlators `E(X Y Z)` with `X ∈ {A, A'}` etc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTable {
    values: [f64; 8],
}

impl CorrelationTable {
    /// Builds from a function of the primed flags `(p1, p2, p3)`.
    pub fn from_fn<F>(mut f: F) -> Result<Self>
    where
        F: FnMut(bool, bool, bool) -> Result<f64>,
    {
        let mut values = [0.0; 8];
        for (i, v) in values.iter_mut().enumerate() {
            *v = f(i & 4 != 0, i & 2 != 0, i & 1 != 0)?;
        }
        Ok(CorrelationTable { values })
    }

    /// `E` with particle k primed when `pk` is true.
    pub fn get(&self, p1: bool, p2: bool, p3: bool) -> f64 {
        self.values[(p1 as usize) << 2 | (p2 as usize) << 1 | p3 as usize]
    }

    /// `E(ABC)+E(ABC')+E(AB'C)+E(A'BC)-E(A'B'C')-E(A'B'C)-E(A'BC')-E(AB'C')`
    pub fn svetlichny_signed(&self) -> f64 {
        let e = |a, b, c| self.get(a, b, c);
        e(false, false, false)
            + e(false, false, true)
            + e(false, true, false)
            + e(true, false, false)
            - e(true, true, true)
            - e(true, true, false)
            - e(true, false, true)
            - e(false, true, true)
    }

    /// `E(ABC')+E(AB'C)+E(A'BC)-E(A'B'C')`
    pub fn mermin_signed(&self) -> f64 {
        let e = |a, b, c| self.get(a, b, c);
        e(false, false, true) + e(false, true, false) + e(true, false, false) - e(true, true, true)
    }

    /// `E(ABC)-E(A'B'C)-E(A'BC')-E(AB'C')`
    pub fn collins_signed(&self) -> f64 {
        let e = |a, b, c| self.get(a, b, c);
        e(false, false, false) - e(true, true, false) - e(true, false, true) - e(false, true, true)
    }
}

pub fn correlation_table(
    state: &SpinState,
    s: &MeasurementSettings,
    model: &SpinModel,
) -> Result<CorrelationTable> {
    require_three(state)?;
    let dirs = s.by_particle();
    let mut ops = [[SingleQubitOperator::identity(); 2]; 3];
    for (k, pair) in dirs.iter().enumerate() {
        for (p, d) in pair.iter().enumerate() {
            ops[k][p] = model.operator(d)?;
        }
    }
    CorrelationTable::from_fn(|p1, p2, p3| {
        let op = tensor3(
            &ops[0][p1 as usize],
            &ops[1][p2 as usize],
            &ops[2][p3 as usize],
        );
        expectation(state, &op)
    })
}

pub fn svetlichny(state: &SpinState, s: &MeasurementSettings, model: &SpinModel) -> Result<f64> {
    Ok(correlation_table(state, s, model)?
        .svetlichny_signed()
        .abs())
}

pub fn mermin(state: &SpinState, s: &MeasurementSettings, model: &SpinModel) -> Result<f64> {
    Ok(correlation_table(state, s, model)?.mermin_signed().abs())
}

pub fn collins(state: &SpinState, s: &MeasurementSettings, model: &SpinModel) -> Result<f64> {
    Ok(correlation_table(state, s, model)?.collins_signed().abs())
}

/// `|S_v|`, `|M|`, `|M'|` with their classical bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityReport {
    pub sv: f64,
    pub m: f64,
    pub m_prime: f64,
    pub sv_bound: f64,
    pub m_bound: f64,
    pub m_prime_bound: f64,
    pub sv_violated: bool,
    pub m_violated: bool,
    pub m_prime_violated: bool,
}

impl InequalityReport {
    pub fn from_values(sv: f64, m: f64, m_prime: f64) -> Self {
        InequalityReport {
            sv,
            m,
            m_prime,
            sv_bound: SV_BOUND,
            m_bound: M_BOUND,
            m_prime_bound: M_BOUND,
            sv_violated: sv > SV_BOUND + VIOLATION_TOL,
            m_violated: m > M_BOUND + VIOLATION_TOL,
            m_prime_violated: m_prime > M_BOUND + VIOLATION_TOL,
        }
    }

    pub fn from_table(t: &CorrelationTable) -> Self {
        Self::from_values(
            t.svetlichny_signed().abs(),
            t.mermin_signed().abs(),
            t.collins_signed().abs(),
        )
    }

    /// `max(| |M| - |S_v|/2 |, | |M'| - |S_v|/2 |)`.
    pub fn half_sv_gap(&self) -> f64 {
        let h = self.sv / 2.0;
        (self.m - h).abs().max((self.m_prime - h).abs())
    }
}

pub fn report(
    state: &SpinState,
    s: &MeasurementSettings,
    model: &SpinModel,
) -> Result<InequalityReport> {
    Ok(InequalityReport::from_table(&correlation_table(
        state, s, model,
    )?))
}

/// Like [`report`], for settings known to maximize `|S_v|`: fails unless
/// `|M| = |M'| = |S_v|/2` within `tol`.
pub fn report_at_sv_optimum(
    state: &SpinState,
    s: &MeasurementSettings,
    model: &SpinModel,
    tol: f64,
) -> Result<InequalityReport> {
    let r = report(state, s, model)?;
    if r.half_sv_gap() > tol {
        return Err(Error::MerminCollinsImbalance {
            m: r.m,
            m_prime: r.m_prime,
            half_sv: r.sv / 2.0,
            tol,
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make, NamedState};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    const P: SpinModel = SpinModel::Pauli;

    #[test]
    fn w_optimal_polar_constant() {
        assert_eq!(W_OPTIMAL_POLAR, (1.0 / SQRT_2).atan());
        assert!((W_OPTIMAL_POLAR.to_degrees() - 35.264).abs() < 1e-3);
    }

    #[test]
    fn ghz_azimuthal_correlation() {
        let g = make(NamedState::Ghz);
        let phis = [0.1, 0.9, 3.0 * FRAC_PI_4 - 1.0];
        let d: Vec<_> = phis.iter().map(|&p| azimuthal_direction(p)).collect();
        let e = correlation(&g, &d[0], &d[1], &d[2], &P).unwrap();
        assert!((e + SQRT_2 / 2.0).abs() < 1e-14);
        let gb = make(NamedState::GhzBar);
        let e = correlation(&gb, &d[0], &d[1], &d[2], &P).unwrap();
        assert!((e - SQRT_2 / 2.0).abs() < 1e-14);
    }

    #[test]
    fn w_along_z_is_minus_one() {
        let w = make(NamedState::W);
        let z = polar_direction(0.0);
        assert!((correlation(&w, &z, &z, &z, &P).unwrap() + 1.0).abs() < 1e-15);
        // W̄ carries two flipped spins, so ZZZ = +1
        let wb = make(NamedState::WBar);
        assert!((correlation(&wb, &z, &z, &z, &P).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn correlation_requires_three_qubits() {
        let b = make(NamedState::BellB);
        let z = Direction::Z;
        assert!(matches!(
            correlation(&b, &z, &z, &z, &P),
            Err(Error::QubitCount { .. })
        ));
    }

    #[test]
    fn cross_correlation_examples() {
        let w = make(NamedState::W);
        let wb = make(NamedState::WBar);
        let z = polar_direction(0.0);
        assert_eq!(cross_correlation(&w, &wb, &z, &z, &z).unwrap(), 0.0);
        let d = polar_direction(35.264f64.to_radians());
        let x = cross_correlation(&w, &wb, &d, &d, &d).unwrap();
        assert!((x + 0.57735).abs() < 1e-5, "{x}");
        let t = [0.3, 1.2, -0.4];
        let ds: Vec<_> = t.iter().map(|&a| polar_direction(a)).collect();
        let self_case = cross_correlation(&w, &w, &ds[0], &ds[1], &ds[2]).unwrap();
        let direct = correlation(&w, &ds[0], &ds[1], &ds[2], &P).unwrap();
        assert!((self_case - direct).abs() < 1e-15);
    }

    #[test]
    fn ghz_lab_maximum() {
        let r = report(
            &make(NamedState::Ghz),
            &MeasurementSettings::ghz_optimal(),
            &P,
        )
        .unwrap();
        assert!((r.sv - 4.0 * SQRT_2).abs() < 1e-12);
        assert!((r.m - 2.0 * SQRT_2).abs() < 1e-12);
        assert!((r.m_prime - 2.0 * SQRT_2).abs() < 1e-12);
        assert!(r.sv_violated && r.m_violated && r.m_prime_violated);
    }

    #[test]
    fn w_lab_maximum() {
        let theta = 35.264f64.to_radians();
        let s = MeasurementSettings::symmetric_polar(theta, PI - theta);
        let r = report(&make(NamedState::W), &s, &P).unwrap();
        assert!((r.sv - 4.354).abs() < 5e-3, "{}", r.sv);
        assert!((r.m - 2.177).abs() < 5e-3);
        assert!(r.half_sv_gap() < 1e-12);
    }

    #[test]
    fn w_along_z_violates_nothing() {
        let s = MeasurementSettings::symmetric_polar(0.0, 0.0);
        let r = report(&make(NamedState::W), &s, &P).unwrap();
        assert!(
            !r.sv_violated && !r.m_violated && !r.m_prime_violated,
            "{r:?}"
        );
    }

    #[test]
    fn boosted_ghz_at_right_angle_has_no_svetlichny_value() {
        let (g, _) = crate::states::boosted_ghz(FRAC_PI_2).unwrap();
        let sv = svetlichny(&g, &MeasurementSettings::ghz_optimal(), &P).unwrap();
        assert!(sv.abs() < 1e-12);
    }

    #[test]
    fn optimum_check_rejects_unbalanced_settings() {
        let s = MeasurementSettings::symmetric_azimuthal(0.2, 1.3);
        let g = make(NamedState::Ghz);
        assert!(report_at_sv_optimum(&g, &MeasurementSettings::ghz_optimal(), &P, 1e-9).is_ok());
        assert!(matches!(
            report_at_sv_optimum(&g, &s, &P, 1e-9),
            Err(Error::MerminCollinsImbalance { .. })
        ));
    }

    #[test]
    fn signed_sum_identity() {
        let s = MeasurementSettings::polar([0.1, 0.7, 2.0], [1.4, -0.3, 0.9]);
        let t = correlation_table(&make(NamedState::W), &s, &P).unwrap();
        let diff = t.svetlichny_signed() - t.mermin_signed() - t.collins_signed();
        assert!(diff.abs() < 1e-15);
    }

    #[test]
    fn czachor_model_validation() {
        assert!(SpinModel::czachor(1.0, Direction::X).is_err());
        let m = SpinModel::czachor(0.0, Direction::X).unwrap();
        let g = make(NamedState::Ghz);
        let s = MeasurementSettings::ghz_optimal();
        let a = report(&g, &s, &m).unwrap();
        let b = report(&g, &s, &P).unwrap();
        assert!((a.sv - b.sv).abs() < 1e-12);
    }
}
