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

#include "sparsefocus/cli/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace sparsefocus::cli
{
    std::string format_double(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    nlohmann::json snapshot_to_json(const ConfigSnapshot &s)
    {
        nlohmann::json j;
        j["side_count"] = s.side_count;
        j["element_count"] = s.side_count * s.side_count;
        j["wavelength_m"] = s.wavelength;
        j["spacing_m"] = s.spacing;
        j["spacing_lambda"] = s.spacing / s.wavelength;
        j["focal_distance_m"] = s.focal_distance;
        j["focal_distance_lambda"] = s.focal_distance / s.wavelength;
        j["transmit_power_w"] = s.transmit_power;
        j["model_parameters"] = s.model_parameters;
        j["seed"] = s.seed ? nlohmann::json(*s.seed) : nlohmann::json(nullptr);
        j["trials"] = s.trials ? nlohmann::json(*s.trials) : nlohmann::json(nullptr);
        return j;
    }

    ConfigSnapshot snapshot_from_json(const nlohmann::json &j)
    {
        ConfigSnapshot s;
        s.side_count = j.at("side_count").get<std::size_t>();
        s.wavelength = j.at("wavelength_m").get<double>();
        s.spacing = j.at("spacing_m").get<double>();
        s.focal_distance = j.at("focal_distance_m").get<double>();
        s.transmit_power = j.at("transmit_power_w").get<double>();
        s.model_parameters = j.at("model_parameters").get<std::map<std::string, double>>();
        if (j.contains("seed") && !j["seed"].is_null())
            s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("trials") && !j["trials"].is_null())
            s.trials = j["trials"].get<std::size_t>();
        return s;
    }

    nlohmann::json trace_to_json(const PowerTrace &trace, const nlohmann::json &run)
    {
        trace.validate();
        nlohmann::json j;
        j["schema_version"] = schema_version;
        j["tag"] = std::string(to_string(trace.tag));
        j["normalized"] = trace.normalized;
        j["config"] = snapshot_to_json(trace.config);
        if (!run.is_null())
            j["config"]["run"] = run;
        std::vector<double> over_lambda(trace.grid.size());
        for (std::size_t i = 0; i < trace.grid.size(); ++i)
            over_lambda[i] = trace.grid[i] / trace.config.wavelength;
        j["grid"] = trace.grid;
        j["grid_over_lambda"] = over_lambda;
        j["values"] = trace.values;
        return j;
    }

    PowerTrace trace_from_json(const nlohmann::json &j)
    {
        try
        {
            if (j.at("schema_version").get<int>() != schema_version)
                throw std::invalid_argument("unsupported schema_version");
            PowerTrace t;
            t.tag = model_tag_from_string(j.at("tag").get<std::string>());
            t.normalized = j.value("normalized", false);
            t.config = snapshot_from_json(j.at("config"));
            t.grid = j.at("grid").get<std::vector<double>>();
            t.values = j.at("values").get<std::vector<double>>();
            t.validate();
            return t;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument(std::string("malformed trace document: ") + e.what());
        }
    }

    std::string trace_to_csv(const PowerTrace &trace)
    {
        trace.validate();
        std::string out = trace.normalized ? "l_m,l_over_lambda,power_norm,model\n"
                                           : "l_m,l_over_lambda,power_w,model\n";
        const std::string tag(to_string(trace.tag));
        for (std::size_t i = 0; i < trace.grid.size(); ++i)
        {
            out += format_double(trace.grid[i]);
            out += ',';
            out += format_double(trace.grid[i] / trace.config.wavelength);
            out += ',';
            out += format_double(trace.values[i]);
            out += ',';
            out += tag;
            out += '\n';
        }
        return out;
    }

    void write_text_atomic(const std::filesystem::path &path, const std::string &content)
    {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f)
                throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
            f.write(content.data(), std::streamsize(content.size()));
            f.flush();
            if (!f)
            {
                f.close();
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                throw std::runtime_error("write failed for '" + tmp.string() + "'");
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
        {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("cannot rename '" + tmp.string() + "' to '" + path.string() +
                                     "': " + ec.message());
        }
    }

    std::string dump_json(const nlohmann::json &j)
    {
        return j.dump(2) + "\n";
    }

    void write_trace(const PowerTrace &trace, OutputFormat format, const std::filesystem::path &path,
                     const nlohmann::json &run)
    {
        if (trace.grid.empty())
            throw std::invalid_argument("refusing to write an empty trace to '" + path.string() + "'");
        // serialize first so a bad trace never leaves a file behind
        const std::string content =
            format == OutputFormat::csv ? trace_to_csv(trace) : dump_json(trace_to_json(trace, run));
        write_text_atomic(path, content);
    }

    nlohmann::json read_json(const std::filesystem::path &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open '" + path.string() + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        try
        {
            return nlohmann::json::parse(ss.str());
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::runtime_error("'" + path.string() + "' is not valid JSON: " + e.what());
        }
    }

    PowerTrace read_trace_json(const std::filesystem::path &path)
    {
        try
        {
            return trace_from_json(read_json(path));
        }
        catch (const std::invalid_argument &e)
        {
            throw std::invalid_argument(path.string() + ": " + e.what());
        }
    }
}
