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

//! Three-particle Bell-like inequalities for GHZ and W spin states seen
//! from a Lorentz-boosted frame.
//!
//! [`qcore`] holds the dense linear algebra, [`spinops`] the spin
//! observables and Wigner rotations, [`states`] the named states,
//! [`inequalities`] the brute-force correlators, [`closedform`] the
//! analytic expressions, [`optimizer`] the angle search and [`cli`] the
//! command-line front end.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod closedform;
pub mod error;
pub mod inequalities;
pub mod optimizer;
pub mod qcore;
pub mod spinops;
pub mod states;

pub use error::{Error, Result};
