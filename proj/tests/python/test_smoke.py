# SPDX-License-Identifier: Apache-2.0
#
# sparsefocus: near-field power focusing of sparse planar arrays
# Copyright (C) 2026 The sparsefocus authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import math

import pytest

import sparsefocus as sf

LAM = sf.speed_of_light / 300e9


def fig2b():
    return sf.ArrayConfig(7, 15 * LAM, LAM), sf.FocusScenario(700 * LAM, 1.0)


def test_focal_identity():
    a, s = fig2b()
    L = s.focal_distance
    expected = LAM**2 * 49 / (4 * math.pi * L) ** 2
    assert sf.received_power(a, s, L) == pytest.approx(expected, rel=1e-12)


def test_fresnel_reference():
    c, s = sf.fresnel(1.0)
    assert c == pytest.approx(0.779893400376822829, abs=1e-14)
    assert s == pytest.approx(0.438259147390354766, abs=1e-14)


def test_sweep_and_peak():
    a, s = fig2b()
    L = s.focal_distance
    grid = sf.log_grid(0.5 * L, 3 * L, 400)
    t = sf.z_sweep(a, s, grid)
    assert len(t) == 400 and t.tag == "exact"
    l_peak, _, _ = sf.find_peak(t)
    assert 650 * LAM < l_peak < 700 * LAM


def test_noise_expectation_at_zero_sigma():
    a, s = fig2b()
    l = 800 * LAM
    assert sf.expected_power_noisy(a, s, l, 0.0) == sf.received_power(a, s, l)


def test_invalid_geometry_raises():
    with pytest.raises(ValueError):
        sf.ArrayConfig(0, LAM, LAM)


def test_run_missing_seed_names_key(tmp_path):
    text = f"command = noise\npreset = fig5\ntrials = 10\nout = {tmp_path}\n"
    with pytest.raises(ValueError, match="seed"):
        sf.run(text)


def test_run_writes_csv(tmp_path):
    files = sf.run(f"command = zsweep\npreset = fig2b\nout = {tmp_path}\n")
    csv = [f for f in files if f.endswith(".csv")][0]
    lines = open(csv).read().splitlines()
    assert lines[0] == "l_m,l_over_lambda,power_w,model"
    assert len(lines) == 401
