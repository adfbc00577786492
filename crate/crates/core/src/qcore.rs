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

//! Dense complex linear algebra for small spin systems.
//!
//! Basis states are ordered `|s1 s2 ... sn>` with particle 1 as the most
//! significant bit and `+` (spin up along z, bit 0) before `-` (bit 1), so a
//! three-qubit state lists `|+++>, |++->, |+-+>, |+-->, |-++>, |-+->, |--+>, |--->`.

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Default absolute tolerance for norms, phases and real-valued expectations.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Tolerance applied when flagging a 2x2 operator Hermitian or unitary.
pub const FLAG_TOL: f64 = 1e-14;

pub const MAX_QUBITS: usize = 8;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Normalized amplitude vector over the `2^n` product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinState {
    amplitudes: Vec<Complex>,
    qubits: usize,
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() || len > 1 << MAX_QUBITS {
        return Err(Error::InvalidLength(len));
    }
    Ok(len.trailing_zeros() as usize)
}

fn norm_of(amplitudes: &[Complex]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

impl SpinState {
    /// Builds a state from amplitudes that must already be normalized within
    /// [`DEFAULT_TOL`].
    pub fn new(amplitudes: Vec<Complex>) -> Result<Self> {
        Self::with_tolerance(amplitudes, DEFAULT_TOL)
    }

    pub fn with_tolerance(amplitudes: Vec<Complex>, tol: f64) -> Result<Self> {
        let qubits = qubits_for_len(amplitudes.len())?;
        let norm = norm_of(&amplitudes);
        if !norm.is_finite() || (norm - 1.0).abs() > tol {
            return Err(Error::NotNormalized(norm));
        }
        Ok(SpinState { amplitudes, qubits })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex>) -> Result<Self> {
        let qubits = qubits_for_len(amplitudes.len())?;
        let norm = norm_of(&amplitudes);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NotNormalized(norm));
        }
        for a in amplitudes.iter_mut() {
            *a /= norm;
        }
        Ok(SpinState { amplitudes, qubits })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&a| Complex::new(a, 0.0)).collect())
    }

    /// The product basis state with the given index.
    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        if qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::InvalidLength(1 << qubits.min(MAX_QUBITS + 1)));
        }
        let dim = 1 << qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: index,
            });
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Ok(SpinState { amplitudes, qubits })
    }

    /// Normalized superposition of labelled basis states, e.g.
    /// `[(1.0, "+++"), (1.0, "---")]`.
    pub fn from_labels(terms: &[(f64, &str)]) -> Result<Self> {
        let qubits = terms
            .first()
            .map(|(_, l)| l.len())
            .ok_or_else(|| Error::InvalidArgument("empty superposition".into()))?;
        let mut amplitudes = vec![ZERO; 1 << qubits.min(MAX_QUBITS + 1)];
        for (coef, label) in terms {
            if label.len() != qubits {
                return Err(Error::DimensionMismatch {
                    expected: qubits,
                    found: label.len(),
                });
            }
            let index = basis_index(label)
                .ok_or_else(|| Error::InvalidArgument(format!("bad basis label {label:?}")))?;
            amplitudes[index] += Complex::new(*coef, 0.0);
        }
        Self::normalized(amplitudes)
    }

    pub(crate) fn from_unitary_image(amplitudes: Vec<Complex>, qubits: usize) -> Self {
        debug_assert!((norm_of(&amplitudes) - 1.0).abs() < 1e-10);
        SpinState { amplitudes, qubits }
    }

    pub fn qubit_count(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn amplitude(&self, label: &str) -> Option<Complex> {
        if label.len() != self.qubits {
            return None;
        }
        basis_index(label).map(|i| self.amplitudes[i])
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amplitudes)
    }

    /// `<self|other>`, conjugating `self`.
    pub fn inner(&self, other: &SpinState) -> Result<Complex> {
        inner_product(self, other)
    }

    /// `|<self|other>|`.
    pub fn fidelity(&self, other: &SpinState) -> Result<f64> {
        Ok(inner_product(self, other)?.norm())
    }

    /// True when the states agree up to a global phase: `|<a|b>| = 1 ± tol`.
    pub fn equals_up_to_phase(&self, other: &SpinState, tol: f64) -> bool {
        match self.fidelity(other) {
            Ok(f) => (f - 1.0).abs() <= tol,
            Err(_) => false,
        }
    }

    /// Largest amplitude-wise difference; infinite when dimensions differ.
    pub fn max_abs_diff(&self, other: &SpinState) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Maps a label such as `"+-+"` to its basis index.
pub fn basis_index(label: &str) -> Option<usize> {
    if label.is_empty() || label.len() > MAX_QUBITS {
        return None;
    }
    label.chars().try_fold(0usize, |acc, ch| match ch {
        '+' | '0' => Some(acc << 1),
        '-' | '1' => Some((acc << 1) | 1),
        _ => None,
    })
}

pub fn basis_label(index: usize, qubits: usize) -> String {
    (0..qubits)
        .rev()
        .map(|k| if index >> k & 1 == 0 { '+' } else { '-' })
        .collect()
}

pub fn inner_product(a: &SpinState, b: &SpinState) -> Result<Complex> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// A 2x2 complex operator with Hermitian/unitary flags detected at
/// construction within [`FLAG_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitOperator {
    entries: [[Complex; 2]; 2],
    hermitian: bool,
    unitary: bool,
}

impl SingleQubitOperator {
    pub fn new(entries: [[Complex; 2]; 2]) -> Self {
        let mut op = SingleQubitOperator {
            entries,
            hermitian: false,
            unitary: false,
        };
        op.hermitian = op.hermitian_defect() <= FLAG_TOL;
        op.unitary = op.unitary_defect() <= FLAG_TOL;
        op
    }

    pub fn from_real(entries: [[f64; 2]; 2]) -> Self {
        let c = |x: f64| Complex::new(x, 0.0);
        Self::new([
            [c(entries[0][0]), c(entries[0][1])],
            [c(entries[1][0]), c(entries[1][1])],
        ])
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn pauli_x() -> Self {
        Self::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    pub fn pauli_y() -> Self {
        let i = Complex::new(0.0, 1.0);
        Self::new([[ZERO, -i], [i, ZERO]])
    }

    pub fn pauli_z() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, -1.0]])
    }

    pub fn entries(&self) -> &[[Complex; 2]; 2] {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    /// max |M - M†| over entries.
    pub fn hermitian_defect(&self) -> f64 {
        let m = &self.entries;
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                d = d.max((m[r][c] - m[c][r].conj()).norm());
            }
        }
        d
    }

    /// max |M†M - I| over entries.
    pub fn unitary_defect(&self) -> f64 {
        let p = self.adjoint_entries();
        let m = &self.entries;
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let v = p[r][0] * m[0][c] + p[r][1] * m[1][c];
                let target = if r == c { ONE } else { ZERO };
                d = d.max((v - target).norm());
            }
        }
        d
    }

    fn adjoint_entries(&self) -> [[Complex; 2]; 2] {
        let m = &self.entries;
        [
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ]
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.adjoint_entries())
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &SingleQubitOperator) -> Self {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self::new(out)
    }

    pub fn det(&self) -> Complex {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn max_abs_diff(&self, other: &SingleQubitOperator) -> f64 {
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                d = d.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        d
    }
}

/// A dense `2^n x 2^n` operator, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiQubitOperator {
    qubits: usize,
    entries: Vec<Complex>,
    hermitian: bool,
    unitary: bool,
}

impl MultiQubitOperator {
    /// Builds from row-major entries. Flags are detected within
    /// `FLAG_TOL * dim`.
    pub fn from_entries(qubits: usize, entries: Vec<Complex>) -> Result<Self> {
        if qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::InvalidLength(entries.len()));
        }
        let dim = 1usize << qubits;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        let mut op = MultiQubitOperator {
            qubits,
            entries,
            hermitian: false,
            unitary: false,
        };
        let tol = FLAG_TOL * dim as f64;
        op.hermitian = op.hermitian_defect() <= tol;
        op.unitary = op.unitary_defect() <= tol;
        Ok(op)
    }

    pub fn identity(qubits: usize) -> Result<Self> {
        let dim = 1usize << qubits.min(MAX_QUBITS + 1);
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Self::from_entries(qubits, entries)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.qubits
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.dim() + col]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let mut d: f64 = 0.0;
        for r in 0..n {
            for c in r..n {
                d = d.max((self.entry(r, c) - self.entry(c, r).conj()).norm());
            }
        }
        d
    }

    pub fn unitary_defect(&self) -> f64 {
        let n = self.dim();
        let mut d: f64 = 0.0;
        for r in 0..n {
            for c in 0..n {
                let v: Complex = (0..n)
                    .map(|k| self.entry(k, r).conj() * self.entry(k, c))
                    .sum();
                let target = if r == c { ONE } else { ZERO };
                d = d.max((v - target).norm());
            }
        }
        d
    }

    fn mul_vec(&self, v: &[Complex]) -> Vec<Complex> {
        let n = self.dim();
        (0..n)
            .map(|r| {
                self.entries[r * n..(r + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(m, x)| m * x)
                    .sum()
            })
            .collect()
    }

    pub fn max_abs_diff(&self, other: &MultiQubitOperator) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Kronecker product of per-qubit factors, first factor most significant.
pub fn tensor(factors: &[SingleQubitOperator]) -> Result<MultiQubitOperator> {
    let qubits = factors.len();
    if qubits == 0 || qubits > MAX_QUBITS {
        return Err(Error::InvalidLength(qubits));
    }
    let dim = 1usize << qubits;
    let mut entries = vec![ONE; dim * dim];
    for r in 0..dim {
        for c in 0..dim {
            let mut v = ONE;
            for (k, f) in factors.iter().enumerate() {
                let shift = qubits - 1 - k;
                v *= f.entries[r >> shift & 1][c >> shift & 1];
            }
            entries[r * dim + c] = v;
        }
    }
    let hermitian = factors.iter().all(|f| f.hermitian);
    let unitary = factors.iter().all(|f| f.unitary);
    Ok(MultiQubitOperator {
        qubits,
        entries,
        hermitian,
        unitary,
    })
}

/// `a ⊗ b ⊗ c` as an 8x8 operator.
pub fn tensor3(
    a: &SingleQubitOperator,
    b: &SingleQubitOperator,
    c: &SingleQubitOperator,
) -> MultiQubitOperator {
    tensor(&[*a, *b, *c]).expect("three factors are always valid")
}

fn check_dims(op_dim: usize, state: &SpinState) -> Result<()> {
    if op_dim != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: op_dim,
            found: state.dim(),
        });
    }
    Ok(())
}

/// `Re <psi|O|psi>` for a Hermitian-flagged `O`.
pub fn expectation(state: &SpinState, op: &MultiQubitOperator) -> Result<f64> {
    if !op.hermitian {
        return Err(Error::NotHermitian);
    }
    let v = matrix_element(state, op, state)?;
    if v.im.abs() >= DEFAULT_TOL {
        return Err(Error::ComplexExpectation(v.im));
    }
    Ok(v.re)
}

/// `<bra|O|ket>`.
pub fn matrix_element(
    bra: &SpinState,
    op: &MultiQubitOperator,
    ket: &SpinState,
) -> Result<Complex> {
    check_dims(op.dim(), bra)?;
    check_dims(op.dim(), ket)?;
    let image = op.mul_vec(&ket.amplitudes);
    Ok(bra
        .amplitudes
        .iter()
        .zip(&image)
        .map(|(b, x)| b.conj() * x)
        .sum())
}

/// Applies a unitary-flagged operator on the full space.
pub fn apply(op: &MultiQubitOperator, state: &SpinState) -> Result<SpinState> {
    check_dims(op.dim(), state)?;
    if !op.unitary {
        return Err(Error::NotUnitary);
    }
    Ok(SpinState::from_unitary_image(
        op.mul_vec(&state.amplitudes),
        state.qubits,
    ))
}

/// Applies `factors[k]` to qubit `k` without forming the Kronecker product.
pub fn apply_local(factors: &[SingleQubitOperator], state: &SpinState) -> Result<SpinState> {
    if factors.len() != state.qubits {
        return Err(Error::QubitCount {
            expected: state.qubits,
            found: factors.len(),
        });
    }
    if !factors.iter().all(|f| f.unitary) {
        return Err(Error::NotUnitary);
    }
    let n = state.qubits;
    let mut amps = state.amplitudes.clone();
    for (k, f) in factors.iter().enumerate() {
        let stride = 1usize << (n - 1 - k);
        let m = &f.entries;
        for i in 0..amps.len() {
            if i & stride != 0 {
                continue;
            }
            let j = i | stride;
            let (a, b) = (amps[i], amps[j]);
            amps[i] = m[0][0] * a + m[0][1] * b;
            amps[j] = m[1][0] * a + m[1][1] * b;
        }
    }
    Ok(SpinState::from_unitary_image(amps, n))
}
