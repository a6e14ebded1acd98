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

#include "sparsefocus/cli/run_config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace sparsefocus::cli
{
    namespace
    {
        constexpr std::array<std::pair<Command, std::string_view>, 7> command_names{{
            {Command::zsweep, "zsweep"},
            {Command::noise, "noise"},
            {Command::deviation, "deviation"},
            {Command::sensitivity, "sensitivity"},
            {Command::lobes, "lobes"},
            {Command::emulate, "emulate"},
            {Command::compare, "compare"},
        }};

        const std::vector<std::string> model_names{"exact", "closed_form", "noisy_expectation", "noisy_mc",
                                                   "deviated", "deviated_taylor", "emulated"};

        std::string_view trim(std::string_view s)
        {
            const auto ws = " \t\r\n";
            const auto b = s.find_first_not_of(ws);
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        }

        bool ends_with(std::string_view s, std::string_view suffix)
        {
            return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
        }

        std::vector<std::string_view> split_list(std::string_view s)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto pos = s.find(',');
                const auto item = trim(s.substr(0, pos));
                if (!item.empty())
                    out.push_back(item);
                if (pos == std::string_view::npos)
                    break;
                s.remove_prefix(pos + 1);
            }
            return out;
        }

        [[noreturn]] void fail(const std::string &key, const Setting &s, const std::string &msg)
        {
            if (s.line > 0)
                throw ConfigError("line " + std::to_string(s.line) + ": key '" + key + "': " + msg);
            throw ConfigError("--" + key + ": " + msg);
        }

        [[noreturn]] void missing(const std::string &key, const std::string &why = {})
        {
            throw ConfigError("missing required field '" + key + "'" + (why.empty() ? "" : " (" + why + ")"));
        }

        std::optional<double> to_number(std::string_view text)
        {
            text = trim(text);
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            double v = 0.0;
            const auto *end = text.data() + text.size();
            const auto r = std::from_chars(text.data(), end, v);
            if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v))
                return std::nullopt;
            return v;
        }

        class Reader
        {
        public:
            explicit Reader(const Settings &s) : s_(s) {}

            const Setting *get(const std::string &key) const
            {
                const auto it = s_.find(key);
                return it == s_.end() ? nullptr : &it->second;
            }

            bool has(const std::string &key) const { return get(key) != nullptr; }

            std::string text(const std::string &key) const { return std::string(trim(get(key)->value)); }

            double number(const std::string &key) const
            {
                const auto *s = get(key);
                if (auto v = to_number(s->value))
                    return *v;
                fail(key, *s, "expected a number, got '" + s->value + "'");
            }

            double length_value(const std::string &key, std::string_view item, double wavelength) const
            {
                item = trim(item);
                double scale = 1.0;
                if (ends_with(item, "lam"))
                {
                    item.remove_suffix(3);
                    scale = wavelength;
                }
                else if (ends_with(item, "m"))
                    item.remove_suffix(1);
                if (auto v = to_number(item))
                    return *v * scale;
                fail(key, *get(key), "expected a length in meters or wavelengths ('700lam'), got '" +
                                         std::string(item) + "'");
            }

            double length(const std::string &key, double wavelength) const
            {
                return length_value(key, get(key)->value, wavelength);
            }

            std::vector<double> lengths(const std::string &key, double wavelength) const
            {
                std::vector<double> out;
                for (auto item : split_list(get(key)->value))
                    out.push_back(length_value(key, item, wavelength));
                return out;
            }

            std::vector<double> numbers(const std::string &key) const
            {
                std::vector<double> out;
                for (auto item : split_list(get(key)->value))
                {
                    if (auto v = to_number(item))
                        out.push_back(*v);
                    else
                        fail(key, *get(key), "expected a number, got '" + std::string(item) + "'");
                }
                return out;
            }

            std::uint64_t unsigned_value(const std::string &key, std::string_view item) const
            {
                item = trim(item);
                std::uint64_t v = 0;
                const auto *end = item.data() + item.size();
                const auto r = std::from_chars(item.data(), end, v);
                if (item.empty() || r.ec != std::errc() || r.ptr != end)
                    fail(key, *get(key), "expected a non-negative integer, got '" + std::string(item) + "'");
                return v;
            }

            std::uint64_t unsigned_number(const std::string &key) const
            {
                return unsigned_value(key, get(key)->value);
            }

            double frequency(const std::string &key) const
            {
                std::string_view t = trim(get(key)->value);
                double scale = 1.0;
                for (const auto &[suffix, f] : {std::pair{"THz", 1e12}, std::pair{"GHz", 1e9},
                                               std::pair{"MHz", 1e6}, std::pair{"kHz", 1e3}, std::pair{"Hz", 1.0}})
                    if (ends_with(t, suffix))
                    {
                        t.remove_suffix(std::string_view(suffix).size());
                        scale = f;
                        break;
                    }
                if (auto v = to_number(t))
                    return *v * scale;
                fail(key, *get(key), "expected a frequency such as '300e9' or '300GHz'");
            }

            bool boolean(const std::string &key) const
            {
                const auto t = text(key);
                if (t == "true" || t == "1" || t == "yes")
                    return true;
                if (t == "false" || t == "0" || t == "no")
                    return false;
                fail(key, *get(key), "expected true or false");
            }

            void require_positive(const std::string &key, double v) const
            {
                if (!(v > 0.0))
                    fail(key, *get(key), "must be > 0");
            }

            void require_non_negative(const std::string &key, double v) const
            {
                if (!(v >= 0.0))
                    fail(key, *get(key), "must be >= 0");
            }

        private:
            const Settings &s_;
        };
    }

    std::string_view to_string(Command c)
    {
        for (const auto &[cmd, name] : command_names)
            if (cmd == c)
                return name;
        return "unknown";
    }

    std::string_view to_string(OutputFormat f)
    {
        return f == OutputFormat::csv ? "csv" : "json";
    }

    const std::vector<std::string> &known_keys()
    {
        static const std::vector<std::string> keys{
            "command", "preset", "frequency", "wavelength", "power", "side_count", "spacing", "focal",
            "side_counts", "grid_min", "grid_max", "grid_points", "grid_scale", "model", "sigma_phi", "sigmas",
            "delta_x", "delta_y", "deviations", "ple", "d0", "shadow_sigma_db", "trials", "seed", "sensitivity",
            "delta_max", "delta_points", "inputs", "compare_window", "out", "format", "normalize"};
        return keys;
    }

    Settings parse_settings(std::string_view text)
    {
        Settings out;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            const auto nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            const auto &keys = known_keys();
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            if (value.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "' has no value");
            if (out.count(key))
                throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
            out[key] = {value, line_no};
        }
        return out;
    }

    Settings merge_settings(Settings base, const Settings &overrides)
    {
        for (const auto &[k, v] : overrides)
            base[k] = v;
        return base;
    }

    std::vector<double> RunConfig::grid() const
    {
        return grid_log ? log_grid(grid_min, grid_max, grid_points) : linear_grid(grid_min, grid_max, grid_points);
    }

    RunConfig resolve(const Settings &settings)
    {
        const auto &keys = known_keys();
        for (const auto &[k, v] : settings)
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                fail(k, v, "unknown key");

        const Reader r(settings);
        RunConfig rc;

        if (!r.has("command"))
            missing("command");
        {
            const auto name = r.text("command");
            const auto it = std::find_if(command_names.begin(), command_names.end(),
                                         [&](const auto &p) { return p.second == name; });
            if (it == command_names.end())
                fail("command", *r.get("command"), "unknown command '" + name + "'");
            rc.command = it->first;
        }

        const Preset *preset = nullptr;
        if (r.has("preset"))
        {
            rc.preset = r.text("preset");
            try
            {
                preset = &find_preset(rc.preset);
            }
            catch (const std::invalid_argument &e)
            {
                fail("preset", *r.get("preset"), e.what());
            }
        }

        // wavelength first: every other length may be expressed in it
        if (r.has("wavelength"))
        {
            rc.wavelength = r.length("wavelength", 1.0);
            r.require_positive("wavelength", rc.wavelength);
            rc.frequency_hz = speed_of_light / rc.wavelength;
        }
        else if (r.has("frequency"))
        {
            rc.frequency_hz = r.frequency("frequency");
            r.require_positive("frequency", rc.frequency_hz);
            rc.wavelength = speed_of_light / rc.frequency_hz;
        }
        else if (preset)
        {
            rc.frequency_hz = preset->frequency_hz;
            rc.wavelength = preset->wavelength();
        }
        else
            missing("frequency", "or 'wavelength', or a preset");
        const double lam = rc.wavelength;

        if (r.has("power"))
        {
            rc.transmit_power = r.number("power");
            r.require_positive("power", rc.transmit_power);
        }
        else if (preset)
            rc.transmit_power = preset->transmit_power;

        if (r.has("side_count"))
        {
            rc.side_count = r.unsigned_number("side_count");
            if (rc.side_count < 1)
                fail("side_count", *r.get("side_count"), "must be >= 1");
        }
        else if (preset)
            rc.side_count = preset->side_count;
        else
            missing("side_count");

        if (r.has("spacing"))
        {
            rc.spacing = r.length("spacing", lam);
            r.require_positive("spacing", rc.spacing);
        }
        else if (preset)
            rc.spacing = preset->spacing_lambda * lam;
        else
            missing("spacing");

        if (r.has("focal"))
        {
            rc.focal_distance = r.length("focal", lam);
            r.require_positive("focal", rc.focal_distance);
        }
        else if (preset)
            rc.focal_distance = preset->focal_lambda * lam;
        else
            missing("focal");

        if (r.has("side_counts"))
        {
            for (auto item : split_list(r.get("side_counts")->value))
            {
                const auto v = r.unsigned_value("side_counts", item);
                if (v < 1)
                    fail("side_counts", *r.get("side_counts"), "entries must be >= 1");
                rc.side_count_variants.push_back(v);
            }
        }
        else if (preset)
            rc.side_count_variants = preset->side_count_variants;

        GridSpec grid = preset ? preset->grid : GridSpec{};
        if (r.has("grid_points"))
        {
            grid.points = r.unsigned_number("grid_points");
            if (grid.points < 2)
                fail("grid_points", *r.get("grid_points"), "must be >= 2");
        }
        if (r.has("grid_scale"))
        {
            const auto s = r.text("grid_scale");
            if (s != "log" && s != "linear")
                fail("grid_scale", *r.get("grid_scale"), "expected 'log' or 'linear'");
            grid.logarithmic = s == "log";
        }
        rc.grid_points = grid.points;
        rc.grid_log = grid.logarithmic;
        rc.grid_min = r.has("grid_min") ? r.length("grid_min", lam) : grid.lo_factor * rc.focal_distance;
        rc.grid_max = r.has("grid_max") ? r.length("grid_max", lam) : grid.hi_factor * rc.focal_distance;
        if (r.has("grid_min"))
            r.require_positive("grid_min", rc.grid_min);
        if (!(rc.grid_max > rc.grid_min))
        {
            if (r.has("grid_max"))
                fail("grid_max", *r.get("grid_max"), "must exceed grid_min");
            missing("grid_max", "grid_min is beyond the default grid end");
        }

        if (r.has("model"))
        {
            rc.model = r.text("model");
            if (std::find(model_names.begin(), model_names.end(), rc.model) == model_names.end())
                fail("model", *r.get("model"), "unknown model '" + rc.model + "'");
        }
        else if (rc.command == Command::deviation)
            rc.model = "deviated";

        if (r.has("sigma_phi"))
        {
            rc.sigma_phi = r.number("sigma_phi");
            r.require_non_negative("sigma_phi", rc.sigma_phi);
        }
        if (r.has("sigmas"))
        {
            rc.sigmas = r.numbers("sigmas");
            for (double s : rc.sigmas)
                r.require_non_negative("sigmas", s);
        }
        else if (preset && !preset->sigmas.empty())
            rc.sigmas = preset->sigmas;
        else
            rc.sigmas = {0.2, 0.5, 1.0};

        if (r.has("delta_x"))
            rc.delta_x = r.length("delta_x", lam);
        if (r.has("delta_y"))
            rc.delta_y = r.length("delta_y", lam);
        if (r.has("deviations"))
            rc.deviations = r.lengths("deviations", lam);
        else if (preset && !preset->deviations_lambda.empty())
            for (double d : preset->deviations_lambda)
                rc.deviations.push_back(d * lam);
        else
            rc.deviations = {0.0, lam};

        rc.pathloss = preset ? preset->pathloss : CIPathLossParams{};
        if (r.has("ple"))
        {
            rc.pathloss.ple = r.number("ple");
            r.require_positive("ple", rc.pathloss.ple);
        }
        if (r.has("d0"))
        {
            rc.pathloss.reference_distance = r.length("d0", lam);
            r.require_positive("d0", rc.pathloss.reference_distance);
        }
        if (r.has("shadow_sigma_db"))
        {
            rc.pathloss.shadow_sigma_db = r.number("shadow_sigma_db");
            r.require_non_negative("shadow_sigma_db", rc.pathloss.shadow_sigma_db);
        }

        if (r.has("trials"))
            rc.trials = r.unsigned_number("trials");
        if (r.has("seed"))
            rc.seed = r.unsigned_number("seed");

        if (r.has("sensitivity"))
        {
            for (auto item : split_list(r.get("sensitivity")->value))
            {
                const auto colon = item.find(':');
                if (colon == std::string_view::npos)
                    fail("sensitivity", *r.get("sensitivity"), "entries must look like 'spacing:side_count'");
                SensitivityConfig c;
                c.spacing = r.length_value("sensitivity", item.substr(0, colon), lam);
                c.side_count = r.unsigned_value("sensitivity", item.substr(colon + 1));
                if (!(c.spacing > 0.0) || c.side_count < 1)
                    fail("sensitivity", *r.get("sensitivity"), "spacing must be > 0 and side_count >= 1");
                rc.sensitivity.push_back(c);
            }
        }
        else if (preset && !preset->sensitivity_lambda.empty())
            for (const auto &c : preset->sensitivity_lambda)
                rc.sensitivity.push_back({c.spacing * lam, c.side_count});
        else
            rc.sensitivity = {{rc.spacing, rc.side_count}};

        rc.delta_max = preset ? preset->delta_max_lambda * lam : lam;
        if (r.has("delta_max"))
        {
            rc.delta_max = r.length("delta_max", lam);
            r.require_positive("delta_max", rc.delta_max);
        }
        rc.delta_points = preset ? preset->delta_points : 21;
        if (r.has("delta_points"))
        {
            rc.delta_points = r.unsigned_number("delta_points");
            if (rc.delta_points < 2)
                fail("delta_points", *r.get("delta_points"), "must be >= 2");
        }

        if (r.has("inputs"))
            for (auto item : split_list(r.get("inputs")->value))
                rc.inputs.emplace_back(item);
        if (!rc.inputs.empty() && rc.inputs.size() != 2)
            fail("inputs", *r.get("inputs"), "compare takes exactly two trace files");
        if (r.has("compare_window"))
        {
            rc.compare_window = r.text("compare_window");
            if (rc.compare_window != "lobe" && rc.compare_window != "full")
                fail("compare_window", *r.get("compare_window"), "expected 'lobe' or 'full'");
        }

        if (r.has("out"))
            rc.out_dir = r.text("out");
        if (r.has("format"))
        {
            const auto f = r.text("format");
            if (f != "csv" && f != "json")
                fail("format", *r.get("format"), "expected 'csv' or 'json'");
            rc.format = f == "csv" ? OutputFormat::csv : OutputFormat::json;
        }
        if (r.has("normalize"))
            rc.normalize = r.boolean("normalize");

        const bool emulating = rc.command == Command::emulate || rc.model == "emulated";
        if (rc.model == "noisy_mc" && rc.trials < 2)
        {
            if (r.has("trials"))
                fail("trials", *r.get("trials"), "noisy_mc needs at least 2 trials");
            missing("trials", "model noisy_mc");
        }
        const bool stochastic = rc.trials > 0 || rc.model == "noisy_mc" ||
                                (emulating && (rc.pathloss.shadow_sigma_db > 0.0 || rc.sigma_phi > 0.0));
        if (stochastic && !rc.seed)
            missing("seed", "the run has a stochastic component");

        return rc;
    }

    RunConfig parse_config(std::string_view text)
    {
        return resolve(parse_settings(text));
    }
}
