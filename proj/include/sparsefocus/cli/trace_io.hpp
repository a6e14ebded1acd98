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

#ifndef SPARSEFOCUS_CLI_TRACE_IO_HPP
#define SPARSEFOCUS_CLI_TRACE_IO_HPP

#include "sparsefocus/cli/run_config.hpp"
#include "sparsefocus/power_trace.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace sparsefocus::cli
{
    inline constexpr int schema_version = 1;

    // %.17g, enough to round-trip any double
    std::string format_double(double v);

    nlohmann::json snapshot_to_json(const ConfigSnapshot &s);
    ConfigSnapshot snapshot_from_json(const nlohmann::json &j);

    // {schema_version, config, grid, grid_over_lambda, values, tag, normalized}.
    // run, when not null, is stored as config["run"].
    nlohmann::json trace_to_json(const PowerTrace &trace, const nlohmann::json &run = nullptr);
    PowerTrace trace_from_json(const nlohmann::json &j);

    // Header l_m,l_over_lambda,power_w|power_norm,model; LF line endings
    std::string trace_to_csv(const PowerTrace &trace);

    // Writes to "<path>.tmp" then renames over path. Throws std::runtime_error naming the path.
    void write_text_atomic(const std::filesystem::path &path, const std::string &content);

    // Rejects empty or malformed traces before touching the file system
    void write_trace(const PowerTrace &trace, OutputFormat format, const std::filesystem::path &path,
                     const nlohmann::json &run = nullptr);

    std::string dump_json(const nlohmann::json &j);
    nlohmann::json read_json(const std::filesystem::path &path);
    PowerTrace read_trace_json(const std::filesystem::path &path);
}

#endif
