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

//! Named three-qubit states and their boosted decompositions.

use serde::Serialize;

use crate::error::Result;
use crate::qcore::{Complex, SpinState, DEFAULT_TOL};
use crate::spinops::rotate_spins;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedState {
    /// `(|+++> + |--->)/√2`
    Ghz,
    /// `(|++-> + |+-+> + |-++>)/√3`
    W,
    /// `(|---> - |+++>)/√2`
    GhzBar,
    /// `(|--+> + |-+-> + |+-->)/√3`
    WBar,
    /// `(|W̄> - |W>)/√2`
    Tau,
    /// Two-qubit `(|+-> + |-+>)/√2`.
    BellB,
}

pub fn make(name: NamedState) -> SpinState {
    let terms: &[(f64, &str)] = match name {
        NamedState::Ghz => &[(1.0, "+++"), (1.0, "---")],
        NamedState::W => &[(1.0, "++-"), (1.0, "+-+"), (1.0, "-++")],
        NamedState::GhzBar => &[(1.0, "---"), (-1.0, "+++")],
        NamedState::WBar => &[(1.0, "--+"), (1.0, "-+-"), (1.0, "+--")],
        NamedState::Tau => &[
            (1.0, "--+"),
            (1.0, "-+-"),
            (1.0, "+--"),
            (-1.0, "++-"),
            (-1.0, "+-+"),
            (-1.0, "-++"),
        ],
        NamedState::BellB => &[(1.0, "+-"), (1.0, "-+")],
    };
    SpinState::from_labels(terms).expect("named states are well formed")
}

/// `Σ c_k |ψ_k>` checked for unit norm within [`DEFAULT_TOL`].
fn combine(terms: &[(f64, &SpinState)]) -> Result<SpinState> {
    let dim = terms[0].1.dim();
    let mut amps = vec![Complex::new(0.0, 0.0); dim];
    for (c, s) in terms {
        for (a, b) in amps.iter_mut().zip(s.amplitudes()) {
            *a += b * *c;
        }
    }
    SpinState::with_tolerance(amps, DEFAULT_TOL)
}

/// Weights of `|GHZ>, |GHZ̄>, |W>, |W̄>` in a boosted GHZ state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GhzBoostCoefficients {
    pub c_ghz: f64,
    pub c_ghzbar: f64,
    pub c_w: f64,
    pub c_wbar: f64,
}

impl GhzBoostCoefficients {
    pub fn at(omega: f64) -> Self {
        let (s, c) = (omega / 2.0).sin_cos();
        let k = 1.5f64.sqrt() * s * c;
        GhzBoostCoefficients {
            c_ghz: c * c * c,
            c_ghzbar: s * s * s,
            c_w: k * (s + c),
            c_wbar: k * (s - c),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.c_ghz.powi(2) + self.c_ghzbar.powi(2) + self.c_w.powi(2) + self.c_wbar.powi(2)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.c_ghz, self.c_ghzbar, self.c_w, self.c_wbar]
    }

    pub fn state(&self) -> Result<SpinState> {
        combine(&[
            (self.c_ghz, &make(NamedState::Ghz)),
            (self.c_ghzbar, &make(NamedState::GhzBar)),
            (self.c_w, &make(NamedState::W)),
            (self.c_wbar, &make(NamedState::WBar)),
        ])
    }
}

/// Weights of `|+++>, |--->, |W>, |W̄>` in a boosted W state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WBoostCoefficients {
    pub c_ppp: f64,
    pub c_mmm: f64,
    pub c_w: f64,
    pub c_wbar: f64,
}

impl WBoostCoefficients {
    pub fn at(omega: f64) -> Self {
        let (s, c) = (omega / 2.0).sin_cos();
        let k = 3f64.sqrt() * s * c;
        WBoostCoefficients {
            c_ppp: -k * c,
            c_mmm: k * s,
            c_w: c * c * c - 2.0 * c * s * s,
            c_wbar: 2.0 * s * c * c - s * s * s,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.c_ppp.powi(2) + self.c_mmm.powi(2) + self.c_w.powi(2) + self.c_wbar.powi(2)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.c_ppp, self.c_mmm, self.c_w, self.c_wbar]
    }

    pub fn state(&self) -> Result<SpinState> {
        combine(&[
            (self.c_ppp, &SpinState::basis(3, 0)?),
            (self.c_mmm, &SpinState::basis(3, 7)?),
            (self.c_w, &make(NamedState::W)),
            (self.c_wbar, &make(NamedState::WBar)),
        ])
    }
}

/// GHZ state in the moving frame, assembled from the analytic decomposition.
pub fn boosted_ghz(omega: f64) -> Result<(SpinState, GhzBoostCoefficients)> {
    let coefs = GhzBoostCoefficients::at(omega);
    Ok((coefs.state()?, coefs))
}

/// W state in the moving frame, assembled from the analytic decomposition.
pub fn boosted_w(omega: f64) -> Result<(SpinState, WBoostCoefficients)> {
    let coefs = WBoostCoefficients::at(omega);
    Ok((coefs.state()?, coefs))
}

/// Boosted named state computed by rotating each spin, for any named state.
pub fn boosted_numeric(name: NamedState, omega: f64) -> Result<SpinState> {
    rotate_spins(&make(name), omega)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `Γ → 1` with `β → 1`.
    LowEnergy,
    /// `Γ → ∞` with `β → 1` (Wigner angle → π/2).
    HighEnergy,
}

/// Limit of the boosted GHZ state. The high-energy limit is
/// `(1/2)|---> + (√3/2)|W>`, the exact value of the decomposition at Ω = π/2.
pub fn ghz_limit_state(regime: Regime) -> SpinState {
    match regime {
        Regime::LowEnergy => make(NamedState::Ghz),
        Regime::HighEnergy => combine(&[
            (0.5, &SpinState::basis(3, 7).expect("valid basis")),
            (0.75f64.sqrt(), &make(NamedState::W)),
        ])
        .expect("unit norm"),
    }
}

/// Published high-energy GHZ limit `(1/2)(|---> + √(3/2)|W>)`, renormalized
/// (its raw norm² is 5/8). Kept for comparison with [`ghz_limit_state`].
pub fn ghz_high_energy_limit_published() -> SpinState {
    let w = make(NamedState::W);
    let mut amps: Vec<Complex> = w.amplitudes().iter().map(|a| a * 1.5f64.sqrt()).collect();
    amps[7] += Complex::new(1.0, 0.0);
    SpinState::normalized(amps).expect("non-zero")
}

/// Limit of the boosted W state. The high-energy limit is
/// `(1/2)(√3|GHZ̄> + (1/√2)(|W̄> - |W>))`.
pub fn w_limit_state(regime: Regime) -> SpinState {
    match regime {
        Regime::LowEnergy => make(NamedState::W),
        Regime::HighEnergy => combine(&[
            (0.75f64.sqrt(), &make(NamedState::GhzBar)),
            (0.5, &make(NamedState::Tau)),
        ])
        .expect("unit norm"),
    }
}
