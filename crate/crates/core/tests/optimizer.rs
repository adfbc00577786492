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

use std::f64::consts::{PI, SQRT_2};

use boostbell::inequalities::{report, MeasurementSettings, SpinModel};
use boostbell::optimizer::{maximize, probe_simultaneous, AngleParameterization, Functional};
use boostbell::qcore::SpinState;
use boostbell::states::{make, NamedState};

const P: SpinModel = SpinModel::Pauli;

fn run(
    f: Functional,
    s: &SpinState,
    param: AngleParameterization,
    restarts: usize,
    seed: u64,
) -> boostbell::optimizer::OptimizationResult {
    maximize(f, s, &P, param, restarts, seed, 1e-9).unwrap()
}

#[test]
fn ghz_mermin_maximum_is_four() {
    let r = run(
        Functional::Mermin,
        &make(NamedState::Ghz),
        AngleParameterization::General,
        32,
        1,
    );
    assert!((r.best_value - 4.0).abs() < 1e-6, "{}", r.best_value);
}

#[test]
fn w_mermin_maximum() {
    let r = run(
        Functional::Mermin,
        &make(NamedState::W),
        AngleParameterization::General,
        32,
        1,
    );
    assert!((r.best_value - 3.046).abs() < 5e-3, "{}", r.best_value);
}

#[test]
fn half_relation_at_optimizer_maximum() {
    for (st, param) in [
        (NamedState::Ghz, AngleParameterization::SymmetricAzimuth),
        (NamedState::W, AngleParameterization::SymmetricPolar),
        (NamedState::W, AngleParameterization::PlanarPolar),
    ] {
        let s = make(st);
        let r = run(Functional::Svetlichny, &s, param, 8, 3);
        let rep = report(&s, &r.best_settings, &P).unwrap();
        assert!(rep.half_sv_gap() < 1e-6, "{st:?} {param:?} {rep:?}");
    }
}

#[test]
fn never_exceeds_quantum_bound() {
    for st in [NamedState::Ghz, NamedState::W, NamedState::Tau] {
        let r = run(
            Functional::Svetlichny,
            &make(st),
            AngleParameterization::General,
            6,
            7,
        );
        assert!(r.best_value <= 4.0 * SQRT_2 + 1e-9);
    }
}

#[test]
fn more_restarts_never_worse() {
    let s = make(NamedState::W);
    let mut last = f64::NEG_INFINITY;
    for k in [1, 2, 4, 8] {
        let r = run(
            Functional::Collins,
            &s,
            AngleParameterization::PlanarPolar,
            k,
            11,
        );
        assert!(r.best_value >= last);
        assert_eq!(r.restarts_used, k);
        last = r.best_value;
    }
}

#[test]
fn bit_identical_reruns() {
    let s = make(NamedState::Ghz);
    let a = run(
        Functional::Svetlichny,
        &s,
        AngleParameterization::PlanarAzimuth,
        5,
        99,
    );
    let b = run(
        Functional::Svetlichny,
        &s,
        AngleParameterization::PlanarAzimuth,
        5,
        99,
    );
    assert_eq!(a, b);
    assert!(a.best_angles.iter().all(|&x| (0.0..2.0 * PI).contains(&x)));
}

#[test]
fn settings_are_consistent_with_angles() {
    let s = make(NamedState::W);
    let r = run(
        Functional::Svetlichny,
        &s,
        AngleParameterization::SymmetricPolar,
        4,
        1,
    );
    let want = MeasurementSettings::symmetric_polar(r.best_angles[0], r.best_angles[1]);
    assert_eq!(r.best_settings, want);
    assert!((report(&s, &want, &P).unwrap().sv - r.best_value).abs() < 1e-12);
}

#[test]
fn simultaneous_probe_stays_below_half_optimum() {
    let g = probe_simultaneous(&make(NamedState::Ghz), &P, 10_000, 1).unwrap();
    assert!(g <= 2.0 * SQRT_2 + 1e-3, "{g}");
    let w = probe_simultaneous(&make(NamedState::W), &P, 10_000, 1).unwrap();
    assert!(w <= 4.354 / 2.0 + 1e-2, "{w}");
}
