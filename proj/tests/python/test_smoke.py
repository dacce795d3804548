# Copyright 2026 The cdtising Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import cdtising


def test_version():
    assert cdtising.__version__ == "0.1.0"


def test_strip_counts():
    assert cdtising.count_strips(2, 3) == 4
    assert cdtising.count_strips(60, 60) == math.comb(119, 59)
    strips = cdtising.enumerate_strips(3, 2)
    assert len(strips) == cdtising.count_strips(3, 2)
    assert all(s.count("U") == 3 and s.count("D") == 2 for s in strips)


def test_pure_spectrum():
    lam = cdtising.lambda_pure(0.25)
    assert lam == pytest.approx(0.071796769724490826, rel=1e-14)
    n_max = cdtising.residual_truncation_rule(0.25)
    right, left = cdtising.eigen_residuals(0.25, n_max)
    assert right < 1e-8 and left < 1e-8
    u = cdtising.truncated_U(0.25, 6)
    assert u.shape == (6, 6)
    assert np.trace(np.linalg.matrix_power(u, 3)) == pytest.approx(
        cdtising.z_n_truncated(3, 0.25, 6), rel=1e-12)


def test_strip_matrices():
    t = cdtising.matrix_T(0.0, 1.0)
    assert np.allclose(t, math.exp(-1.0) * np.ones((2, 2)))
    assert cdtising.lambda_condition(0.0, 2.0 * math.log(2.0)) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(cdtising.DivergenceError):
        cdtising.matrix_M(0.0, 0.5)


def test_coupled_operator():
    k = cdtising.truncated_K(0.3, 2.5, 4)
    assert k.shape == (140, 140)
    xi2 = cdtising.xi_n_truncated(2, 0.3, 2.5, 4)
    assert np.trace(k @ k) == pytest.approx(xi2, rel=1e-12)
    rep = cdtising.principal_eigenvalue_K(0.3, 2.5, 4)
    assert rep["eigenvalue"] == pytest.approx(0.035384415347548617, rel=1e-12)
    with pytest.raises(cdtising.ResourceError):
        cdtising.truncated_K(0.3, 2.5, 9)


def test_critical_region():
    assert cdtising.solve_boundary_mu(0.0) == pytest.approx(2.0 * math.log(2.0), abs=1e-9)
    curves = cdtising.bound_lines([0.0, 0.5, 1.0])
    assert list(curves) == ["lambda_Q_eq_1", "lambda_T_eq_1", "beta0_bound",
                            "ground_state_bound", "sufficient_bound"]
    assert all(q >= t for q, t in zip(curves["lambda_Q_eq_1"], curves["lambda_T_eq_1"]))
    assert cdtising.region_classify(0.0, 1.0) == "T_only"
    with pytest.raises(cdtising.DomainError):
        cdtising.solve_boundary_mu(0.0, 1e-2)


def test_sampler():
    probs, tail = cdtising.transition_row(1, 0.25)
    assert abs(sum(probs) + tail - 1.0) < 1e-12
    a = cdtising.run_chain(0.25, 50000, seed=4)
    b = cdtising.run_chain(0.25, 50000, seed=4)
    assert a == b
    assert a["recorded"] == 50000
    assert a["tv_distance"] < 0.05
    with pytest.raises(cdtising.Error):
        cdtising.run_chain(0.6, 10)
