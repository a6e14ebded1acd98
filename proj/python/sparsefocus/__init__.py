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

"""Near-field power focusing of sparse planar arrays."""

from ._core import (  # noqa: F401
    ArrayConfig,
    ConfigError,
    FocusScenario,
    LobeExtent,
    PowerTrace,
    approx_power,
    b_min,
    expected_power_noisy,
    find_peak,
    fresnel,
    fspl_db,
    linear_grid,
    log_grid,
    main_lobe_extent,
    preset_names,
    received_power,
    received_power_deviated,
    run,
    speed_of_light,
    z_sweep,
)

__version__ = "1.0.0"
