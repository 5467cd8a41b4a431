# Copyright 2026 The photent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings."""

import math

import numpy as np
import pytest

import photent

LOG3 = math.log2(3.0)


def test_fock_basis_order():
    assert photent.fock_basis(2, 2) == [[2, 0], [1, 1], [0, 2]]
    assert photent.dimension(4, 3) == 20


def test_haar_sample_is_unitary():
    u = photent.haar_sample(5, 7)
    assert u.shape == (5, 5)
    assert np.allclose(u.conj().T @ u, np.eye(5), atol=1e-12)
    assert np.array_equal(u, photent.haar_sample(5, 7))


def test_hong_ou_mandel():
    bs = photent.fixture("BS1")
    assert abs(photent.amplitude(bs, [1, 1], [1, 1])) < 1e-12
    assert abs(abs(photent.amplitude(bs, [1, 1], [2, 0])) ** 2 - 0.5) < 1e-12


def test_permanent_of_ones():
    assert abs(photent.permanent(np.ones((4, 4), dtype=complex)) - 24) < 1e-12


def test_output_state_normalized():
    basis, amps = photent.output_state(photent.haar_sample(4, 3), [1, 1, 1, 0])
    assert len(basis) == len(amps) == photent.dimension(4, 3)
    assert abs(sum(abs(a) ** 2 for a in amps) - 1.0) < 1e-12


def test_bs2_entanglement():
    u = photent.fixture("BS2")
    assert abs(photent.average_entanglement(u, [1, 1], (1, 1, 0)) - LOG3) < 1e-9
    (outcome,) = photent.herald(u, [1, 1], (1, 1, 0))
    assert outcome["possible"]
    assert abs(outcome["entanglement"] - LOG3) < 1e-9


def test_heralded_probabilities_sum_to_one():
    outcomes = photent.herald(photent.haar_sample(5, 11), [1, 1, 1, 0, 0], (2, 2, 1))
    assert abs(sum(o["probability"] for o in outcomes) - 1.0) < 1e-12


def test_bounds():
    assert photent.dimensionality_bound(2, 2) == (4, 2.0)
    assert photent.linearity_bound(4) == 4.0
    assert abs(photent.bunched_entropy(2, 0.5) - 1.5) < 1e-14
    assert abs(photent.mean_constrained_entropy_bound(1.0) - 2.0) < 1e-14
    assert abs(photent.jensen_log3_bound([0.0, 1.0]) - LOG3) < 1e-14
    with pytest.raises(ValueError):
        photent.mean_constrained_entropy_bound(-1.0)


def test_generator_round_trip():
    u = photent.haar_sample(3, 5)
    theta = photent.generator_of(u)
    assert len(theta) == 9
    assert np.allclose(photent.realize(3, theta), u, atol=1e-10)


def test_objectives():
    identity = np.eye(8, dtype=complex)
    four = [1, 1, 1, 1, 0, 0, 0, 0]
    assert photent.bell_cost(identity, four, (2, 2, 4)) == 0.0
    assert photent.dual_rail_ent_yield(np.eye(5, dtype=complex), [1, 1, 1, 0, 0], (2, 2, 1)) == 0.0
    with pytest.raises(ValueError):
        photent.bell_cost(identity, four, (3, 1, 4))


def test_minimize_finds_log3():
    r = photent.minimize("neg_avg_entanglement", [1, 1], (1, 1, 0), restarts=5, seed=3)
    assert abs(r["best_value"] + LOG3) < 1e-6
    assert len(r["per_restart_values"]) == 5
    u = r["best_unitary"]
    assert abs(photent.average_entanglement(u, [1, 1], (1, 1, 0)) - LOG3) < 1e-6


def test_non_unitary_rejected():
    with pytest.raises(ValueError):
        photent.average_entanglement(2 * np.eye(2, dtype=complex), [1, 1], (1, 1, 0))
