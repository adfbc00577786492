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

//! Measurement operators (Pauli and Czachor) and the boost machinery:
//! rapidities, the Wigner angle and the spin-1/2 Wigner rotation.
//!
//! Geometry is fixed: particles move along `z` in the lab frame and the
//! observer's frame moves along `x`, so every Wigner rotation is about `y`.

use crate::error::{check_range, Error, Result};
use crate::qcore::{apply_local, Complex, SingleQubitOperator, SpinState, DEFAULT_TOL};

/// A unit vector in three dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    x: f64,
    y: f64,
    z: f64,
}

impl Direction {
    pub const X: Direction = Direction {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const Y: Direction = Direction {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const Z: Direction = Direction {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Accepts components whose squared norm is `1 ± 1e-12`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || (n2 - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NonUnitDirection(x, y, z));
        }
        Ok(Direction { x, y, z })
    }

    /// Scales any non-zero vector to unit length.
    pub fn normalize(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::NonUnitDirection(x, y, z));
        }
        Ok(Direction {
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    /// Polar angle from `z`, azimuth from `x` in the x-y plane.
    pub fn spherical(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Direction {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Direction) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }
}

/// `(cos φ, sin φ, 0)`.
pub fn azimuthal_direction(phi: f64) -> Direction {
    let (s, c) = phi.sin_cos();
    Direction { x: c, y: s, z: 0.0 }
}

/// `(sin θ, 0, cos θ)`.
pub fn polar_direction(theta: f64) -> Direction {
    let (s, c) = theta.sin_cos();
    Direction { x: s, y: 0.0, z: c }
}

fn sigma_dot(x: f64, y: f64, z: f64) -> SingleQubitOperator {
    SingleQubitOperator::new([
        [Complex::new(z, 0.0), Complex::new(x, -y)],
        [Complex::new(x, y), Complex::new(-z, 0.0)],
    ])
}

/// `n · σ`.
pub fn pauli_along(n: &Direction) -> SingleQubitOperator {
    sigma_dot(n.x, n.y, n.z)
}

/// Czachor's spin observable for a particle moving with speed
/// `particle_speed` along `motion`, measured along `a`:
///
/// `(√(1-β²) a⊥ + a∥)·σ / √(1 + β²((ê·a)² - 1))`
///
/// The effective vector is unit length for every input, so the operator keeps
/// eigenvalues ±1.
pub fn czachor_along(
    a: &Direction,
    particle_speed: f64,
    motion: &Direction,
) -> Result<SingleQubitOperator> {
    check_range(
        "particle_speed",
        particle_speed,
        (0.0..1.0).contains(&particle_speed),
        "0 <= speed < 1",
    )?;
    let proj = a.dot(motion);
    let par = [proj * motion.x, proj * motion.y, proj * motion.z];
    let perp = [a.x - par[0], a.y - par[1], a.z - par[2]];
    let b2 = particle_speed * particle_speed;
    let contraction = ((1.0 - particle_speed) * (1.0 + particle_speed)).sqrt();
    let denom = (1.0 + b2 * (proj * proj - 1.0)).sqrt();
    let v: Vec<f64> = (0..3)
        .map(|k| (contraction * perp[k] + par[k]) / denom)
        .collect();
    Ok(sigma_dot(v[0], v[1], v[2]))
}

/// Boost speed `β` of the observer (along `x`) and the particles' lab energy
/// factor `Γ = p₀/m` (motion along `z`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostContext {
    beta: f64,
    gamma: f64,
}

impl BoostContext {
    pub fn new(beta: f64, gamma_particle: f64) -> Result<Self> {
        check_range("beta", beta, (0.0..1.0).contains(&beta), "0 <= beta < 1")?;
        check_range("gamma", gamma_particle, gamma_particle >= 1.0, "gamma >= 1")?;
        Ok(BoostContext {
            beta,
            gamma: gamma_particle,
        })
    }

    /// Lab frame: no boost, particles at rest.
    pub fn rest() -> Self {
        BoostContext {
            beta: 0.0,
            gamma: 1.0,
        }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `1 - β²`, computed as `(1-β)(1+β)` to keep precision near β = 1.
    pub fn one_minus_beta_sq(&self) -> f64 {
        (1.0 - self.beta) * (1.0 + self.beta)
    }

    /// `cosh α = (1-β²)^(-1/2)`.
    pub fn cosh_alpha(&self) -> f64 {
        1.0 / self.one_minus_beta_sq().sqrt()
    }

    pub fn sinh_alpha(&self) -> f64 {
        self.beta / self.one_minus_beta_sq().sqrt()
    }

    pub fn alpha(&self) -> f64 {
        self.beta.atanh()
    }

    /// `cosh δ = Γ`.
    pub fn cosh_delta(&self) -> f64 {
        self.gamma
    }

    pub fn sinh_delta(&self) -> f64 {
        ((self.gamma - 1.0) * (self.gamma + 1.0)).sqrt()
    }

    pub fn delta(&self) -> f64 {
        self.gamma.acosh()
    }

    /// Lab-frame particle speed `v₀ = √(1 - 1/Γ²)`.
    pub fn particle_speed(&self) -> f64 {
        self.sinh_delta() / self.gamma
    }

    pub fn p0_over_m(&self) -> f64 {
        self.gamma
    }

    pub fn wigner_angle(&self) -> f64 {
        wigner_angle(self)
    }
}

/// `Ω = atan(sinh α sinh δ / (cosh α + cosh δ))`, in `[0, π/2)`.
pub fn wigner_angle(ctx: &BoostContext) -> f64 {
    let num = ctx.sinh_alpha() * ctx.sinh_delta();
    let den = ctx.cosh_alpha() + ctx.cosh_delta();
    num.atan2(den)
}

/// Spin-1/2 Wigner rotation `cos(Ω/2) I - i σ_y sin(Ω/2)`.
pub fn wigner_rotation(omega: f64) -> SingleQubitOperator {
    let (s, c) = (omega / 2.0).sin_cos();
    SingleQubitOperator::from_real([[c, -s], [s, c]])
}

/// Rotates every spin of `state` by the same Wigner angle.
pub fn rotate_spins(state: &SpinState, omega: f64) -> Result<SpinState> {
    let d = wigner_rotation(omega);
    apply_local(&vec![d; state.qubit_count()], state)
}

/// Boosted spin state `∏ D(W(Λ,p_i)) |ψ>` for three particles with equal
/// momenta.
pub fn boost_state(state: &SpinState, ctx: &BoostContext) -> Result<SpinState> {
    if state.qubit_count() != 3 {
        return Err(Error::QubitCount {
            expected: 3,
            found: state.qubit_count(),
        });
    }
    rotate_spins(state, ctx.wigner_angle())
}
