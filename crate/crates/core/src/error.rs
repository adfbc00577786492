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

use thiserror::Error;

/// Errors produced by the state, operator and inequality machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("amplitude count {0} is not a power of two between 2 and 256")]
    InvalidLength(usize),
    #[error("state is not normalized: norm {0}")]
    NotNormalized(f64),
    #[error("operator is not flagged Hermitian")]
    NotHermitian,
    #[error("operator is not flagged unitary")]
    NotUnitary,
    #[error("expectation value has imaginary part {0:e}")]
    ComplexExpectation(f64),
    #[error("direction ({0}, {1}, {2}) is not a unit vector")]
    NonUnitDirection(f64, f64, f64),
    #[error("{name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    #[error("expected a {expected}-qubit state, found {found} qubits")]
    QubitCount { expected: usize, found: usize },
    #[error("|M| = {m}, |M'| = {m_prime} differ from |S_v|/2 = {half_sv} by more than {tol:e}")]
    MerminCollinsImbalance {
        m: f64,
        m_prime: f64,
        half_sv: f64,
        tol: f64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(
    name: &'static str,
    value: f64,
    ok: bool,
    expected: &'static str,
) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            expected,
        })
    }
}
