// SPDX-License-Identifier: Apache-2.0
//
// sparsefocus: near-field power focusing of sparse planar arrays
// Copyright (C) 2026 The sparsefocus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SPARSEFOCUS_CLI_RUNNER_HPP
#define SPARSEFOCUS_CLI_RUNNER_HPP

#include "sparsefocus/cli/run_config.hpp"
#include "sparsefocus/cli/trace_io.hpp"
#include "sparsefocus/sweeps.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace sparsefocus::cli
{
    struct RunResult
    {
        std::vector<std::filesystem::path> files; // in write order
        std::vector<std::string> warnings;
    };

    // Every resolved field, defaults included
    nlohmann::json run_config_to_json(const RunConfig &rc);

    ModelSpec model_from_config(const RunConfig &rc);

    // Predicted main lobe [L + backward, L + forward], clipped to hi when the
    // forward side is unbounded
    std::pair<double, double> lobe_window(const ArrayConfig &cfg, double focal_distance, double hi);

    // Predicted extents, minima measured on a step-lambda linear grid, and the relative gaps in l
    nlohmann::json lobe_report(const ArrayConfig &cfg, const FocusScenario &sc);

    // Executes the command and writes every artifact into rc.out_dir.
    // Throws on model or I/O errors; files already renamed into place stay complete.
    RunResult run(const RunConfig &rc);
}

#endif
