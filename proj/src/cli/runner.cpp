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

#include "sparsefocus/cli/runner.hpp"
#include "sparsefocus/closed_form.hpp"

#include <cmath>
#include <cstdio>

namespace sparsefocus::cli
{
    namespace
    {
        std::string extension(OutputFormat f)
        {
            return f == OutputFormat::csv ? ".csv" : ".json";
        }

        // compact label for file names: 0.2 -> "0.2", 1 -> "1"
        std::string label(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", v);
            return buf;
        }

        nlohmann::json dual(double meters, double wavelength)
        {
            return {{"m", meters}, {"lambda", meters / wavelength}};
        }

        nlohmann::json optional_dual(const std::optional<double> &meters, double wavelength)
        {
            return meters ? dual(*meters, wavelength) : nlohmann::json(nullptr);
        }

        std::optional<double> relative_gap(const std::optional<double> &measured, double predicted)
        {
            if (!measured)
                return std::nullopt;
            return (*measured - predicted) / predicted;
        }

        class Writer
        {
        public:
            Writer(const RunConfig &rc, RunResult &result) : rc_(rc), result_(result), run_(run_config_to_json(rc))
            {
                std::filesystem::create_directories(rc.out_dir);
            }

            void trace(const std::string &stem, PowerTrace t)
            {
                if (rc_.normalize && !t.normalized)
                    t = peak_normalized(t);
                const auto path = std::filesystem::path(rc_.out_dir) / (stem + extension(rc_.format));
                write_trace(t, rc_.format, path, run_);
                result_.files.push_back(path);
            }

            void json(const std::string &name, nlohmann::json doc)
            {
                doc["config"]["run"] = run_;
                text(name, dump_json(doc));
            }

            void text(const std::string &name, const std::string &content)
            {
                const auto path = std::filesystem::path(rc_.out_dir) / name;
                write_text_atomic(path, content);
                result_.files.push_back(path);
            }

            const nlohmann::json &run_json() const { return run_; }

        private:
            const RunConfig &rc_;
            RunResult &result_;
            nlohmann::json run_;
        };

        nlohmann::json comparison_json(const TraceComparison &c, double wavelength)
        {
            return {{"max_relative_error", c.max_relative_error},
                    {"rms_relative_error", c.rms_relative_error},
                    {"peak_shift", dual(c.peak_shift, wavelength)},
                    {"points", c.points}};
        }

        void warn_deviation(const RunConfig &rc, const DeviationModel &dev, RunResult &result)
        {
            if (deviation_outside_small_regime(rc.array(), dev))
                result.warnings.push_back("deviation (" + label(dev.delta_x / rc.wavelength) + ", " +
                                          label(dev.delta_y / rc.wavelength) +
                                          ") lambda exceeds half the element spacing; the small-deviation "
                                          "picture no longer applies");
        }

        void run_zsweep(const RunConfig &rc, Writer &w, RunResult &result)
        {
            const auto model = model_from_config(rc);
            if (const auto *d = std::get_if<DeviatedModel>(&model))
                warn_deviation(rc, d->deviation, result);
            if (const auto *d = std::get_if<DeviatedTaylorModel>(&model))
                warn_deviation(rc, d->deviation, result);

            const auto grid = rc.grid();
            const std::string stem = "zsweep_" + rc.model;
            if (rc.side_count_variants.empty())
            {
                w.trace(stem, z_sweep(rc.array(), rc.scenario(), grid, model));
                return;
            }
            nlohmann::json verdicts = nlohmann::json::array();
            for (auto side : rc.side_count_variants)
            {
                const ArrayConfig cfg(side, rc.spacing, rc.wavelength);
                const auto trace = z_sweep(cfg, rc.scenario(), grid, model);
                const auto v = classify_focusing(trace);
                const auto peak = find_peak(trace);
                verdicts.push_back({{"side_count", side},
                                    {"focusing", v.focusing},
                                    {"peak_index", v.peak_index},
                                    {"peak_l", dual(peak.l, rc.wavelength)},
                                    {"margin_db", v.margin_db},
                                    {"threshold_db", 3.0}});
                w.trace(stem + "_n" + std::to_string(side), trace);
            }
            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["config"] = snapshot_to_json(ConfigSnapshot::from(rc.array(), rc.scenario()));
            doc["variants"] = verdicts;
            w.json("focusing.json", doc);
        }

        void run_noise(const RunConfig &rc, Writer &w)
        {
            const auto grid = rc.grid();
            const auto traces = noise_sweep(rc.array(), rc.scenario(), grid, rc.sigmas);
            for (std::size_t i = 0; i < traces.size(); ++i)
                w.trace("noise_sigma_" + label(rc.sigmas[i]), traces[i]);
            if (rc.trials > 0)
                for (double s : rc.sigmas)
                    w.trace("noise_mc_sigma_" + label(s),
                            z_sweep(rc.array(), rc.scenario(), grid, NoisyMonteCarloModel{{s}, rc.trials, *rc.seed}));
        }

        void run_deviation(const RunConfig &rc, Writer &w, RunResult &result)
        {
            const bool taylor = rc.model == "deviated_taylor";
            const auto grid = rc.grid();
            for (double d : rc.deviations)
            {
                const DeviationModel dev{d, d};
                warn_deviation(rc, dev, result);
                const auto t = taylor ? z_sweep(rc.array(), rc.scenario(), grid, DeviatedTaylorModel{dev})
                                      : z_sweep(rc.array(), rc.scenario(), grid, DeviatedModel{dev});
                w.trace(std::string(taylor ? "deviation_taylor_" : "deviation_") + label(d / rc.wavelength) + "lam",
                        t);
            }
        }

        void run_sensitivity(const RunConfig &rc, Writer &w)
        {
            std::vector<double> deltas(rc.delta_points);
            for (std::size_t j = 0; j < deltas.size(); ++j)
                deltas[j] = j + 1 == deltas.size() ? rc.delta_max
                                                   : rc.delta_max * double(j) / double(deltas.size() - 1);
            const auto table = sensitivity_sweep(rc.wavelength, rc.scenario(), rc.sensitivity, deltas);
            const auto below = table.first_column_below(0.9);

            if (rc.format == OutputFormat::csv)
            {
                std::string out = "spacing_m,spacing_lambda,side_count,delta_m,delta_over_lambda,power_norm\n";
                for (std::size_t i = 0; i < table.configs.size(); ++i)
                    for (std::size_t j = 0; j < deltas.size(); ++j)
                    {
                        const auto &c = table.configs[i];
                        out += format_double(c.spacing) + ',' + format_double(c.spacing / rc.wavelength) + ',' +
                               std::to_string(c.side_count) + ',' + format_double(deltas[j]) + ',' +
                               format_double(deltas[j] / rc.wavelength) + ',' +
                               format_double(table.normalized_power[i][j]) + '\n';
                    }
                w.text("sensitivity.csv", out);
                return;
            }
            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["config"] = {{"wavelength_m", rc.wavelength},
                             {"focal_distance", dual(rc.focal_distance, rc.wavelength)},
                             {"transmit_power_w", rc.transmit_power}};
            doc["deltas"] = deltas;
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < table.configs.size(); ++i)
                rows.push_back({{"spacing", dual(table.configs[i].spacing, rc.wavelength)},
                                {"side_count", table.configs[i].side_count},
                                {"normalized_power", table.normalized_power[i]}});
            doc["rows"] = rows;
            doc["first_column_below_0.9"] = below ? nlohmann::json(*below) : nlohmann::json(nullptr);
            w.json("sensitivity.json", doc);
        }

        void run_emulate(const RunConfig &rc, Writer &w)
        {
            const auto grid = rc.grid();
            const auto em = emulate_measurement_trace(rc.array(), rc.scenario(), grid, rc.pathloss,
                                                      {rc.sigma_phi}, rc.seed.value_or(0));
            const auto exact = z_sweep(rc.array(), rc.scenario(), grid, ExactModel{});
            w.trace("emulate", em);

            CompareOptions opt;
            opt.window = lobe_window(rc.array(), rc.focal_distance, grid.back());
            const auto full = compare_traces(exact, em, {true, std::nullopt, false});
            const auto lobe = compare_traces(exact, em, opt);
            const auto pe = find_peak(em), px = find_peak(exact);
            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["config"] = snapshot_to_json(em.config);
            doc["reference"] = "exact";
            doc["full"] = comparison_json(full, rc.wavelength);
            doc["main_lobe"] = comparison_json(lobe, rc.wavelength);
            doc["main_lobe"]["window"] = {dual(opt.window->first, rc.wavelength), dual(opt.window->second, rc.wavelength)};
            doc["emulated_peak"] = dual(pe.l, rc.wavelength);
            doc["exact_peak"] = dual(px.l, rc.wavelength);
            w.json("emulate_vs_exact.json", doc);
        }

        void run_compare(const RunConfig &rc, Writer &w)
        {
            PowerTrace a, b;
            nlohmann::json sources;
            if (!rc.inputs.empty())
            {
                a = read_trace_json(rc.inputs[0]);
                b = read_trace_json(rc.inputs[1]);
                sources = rc.inputs;
            }
            else
            {
                const auto grid = rc.grid();
                a = z_sweep(rc.array(), rc.scenario(), grid, ExactModel{});
                b = z_sweep(rc.array(), rc.scenario(), grid, ClosedFormModel{});
                sources = {"exact", "closed_form"};
            }
            CompareOptions opt;
            if (rc.compare_window == "lobe")
                opt.window = lobe_window(a.config.array(), a.config.focal_distance, a.grid.back());
            const auto c = compare_traces(a, b, opt);
            const double lam = a.config.wavelength;

            nlohmann::json doc;
            doc["schema_version"] = schema_version;
            doc["config"] = {{"a", snapshot_to_json(a.config)}, {"b", snapshot_to_json(b.config)}};
            doc["sources"] = sources;
            doc["tags"] = {std::string(to_string(a.tag)), std::string(to_string(b.tag))};
            doc["normalize"] = opt.normalize;
            doc["window"] = opt.window ? nlohmann::json{dual(opt.window->first, lam), dual(opt.window->second, lam)}
                                       : nlohmann::json(nullptr);
            doc["comparison"] = comparison_json(c, lam);
            w.json("compare.json", doc);
        }
    }

    nlohmann::json run_config_to_json(const RunConfig &rc)
    {
        const double lam = rc.wavelength;
        nlohmann::json j;
        j["command"] = std::string(to_string(rc.command));
        j["preset"] = rc.preset.empty() ? nlohmann::json(nullptr) : nlohmann::json(rc.preset);
        j["frequency_hz"] = rc.frequency_hz;
        j["wavelength_m"] = lam;
        j["transmit_power_w"] = rc.transmit_power;
        j["side_count"] = rc.side_count;
        j["spacing"] = dual(rc.spacing, lam);
        j["focal_distance"] = dual(rc.focal_distance, lam);
        j["side_count_variants"] = rc.side_count_variants;
        j["grid"] = {{"min", dual(rc.grid_min, lam)},
                     {"max", dual(rc.grid_max, lam)},
                     {"points", rc.grid_points},
                     {"scale", rc.grid_log ? "log" : "linear"}};
        j["model"] = rc.model;
        j["sigma_phi"] = rc.sigma_phi;
        j["sigmas"] = rc.sigmas;
        j["delta_x"] = dual(rc.delta_x, lam);
        j["delta_y"] = dual(rc.delta_y, lam);
        nlohmann::json devs = nlohmann::json::array();
        for (double d : rc.deviations)
            devs.push_back(dual(d, lam));
        j["deviations"] = devs;
        j["pathloss"] = {{"ple", rc.pathloss.ple},
                         {"reference_distance_m", rc.pathloss.reference_distance},
                         {"shadow_sigma_db", rc.pathloss.shadow_sigma_db}};
        j["trials"] = rc.trials;
        j["seed"] = rc.seed ? nlohmann::json(*rc.seed) : nlohmann::json(nullptr);
        nlohmann::json sens = nlohmann::json::array();
        for (const auto &c : rc.sensitivity)
            sens.push_back({{"spacing", dual(c.spacing, lam)}, {"side_count", c.side_count}});
        j["sensitivity"] = sens;
        j["delta_max"] = dual(rc.delta_max, lam);
        j["delta_points"] = rc.delta_points;
        j["inputs"] = rc.inputs;
        j["compare_window"] = rc.compare_window;
        j["format"] = std::string(to_string(rc.format));
        j["normalize"] = rc.normalize;
        // out_dir is left out on purpose: the same run written elsewhere stays byte-identical
        return j;
    }

    ModelSpec model_from_config(const RunConfig &rc)
    {
        const DeviationModel dev{rc.delta_x, rc.delta_y};
        const PhaseNoiseModel noise{rc.sigma_phi};
        const auto &m = rc.model;
        if (m == "exact")
            return ExactModel{};
        if (m == "closed_form")
            return ClosedFormModel{};
        if (m == "noisy_expectation")
            return NoisyExpectationModel{noise};
        if (m == "noisy_mc")
            return NoisyMonteCarloModel{noise, rc.trials, rc.seed.value_or(0)};
        if (m == "deviated")
            return DeviatedModel{dev};
        if (m == "deviated_taylor")
            return DeviatedTaylorModel{dev};
        if (m == "emulated")
            return EmulatedModel{rc.pathloss, noise, rc.seed.value_or(0)};
        throw ConfigError("unknown model '" + m + "'");
    }

    std::pair<double, double> lobe_window(const ArrayConfig &cfg, double focal_distance, double hi)
    {
        const auto ext = main_lobe_extent(cfg, focal_distance);
        const double lo = focal_distance + ext.backward;
        const double up = ext.forward ? std::min(focal_distance + *ext.forward, hi) : hi;
        return {lo, up};
    }

    nlohmann::json lobe_report(const ArrayConfig &cfg, const FocusScenario &sc)
    {
        const double L = sc.focal_distance, lam = cfg.wavelength();
        const auto ext = main_lobe_extent(cfg, L);

        const double lo = std::max(L + 3.0 * ext.backward, 0.1 * L);
        const double hi = ext.forward ? L + 3.0 * *ext.forward : 4.0 * L;
        const auto points = std::size_t(std::floor((hi - lo) / lam)) + 1;
        const auto grid = linear_grid(lo, lo + double(points - 1) * lam, points);
        const auto trace = z_sweep(cfg, sc, grid, ExactModel{});
        const auto minima = find_lobe_minima(trace, L);
        const auto peak = find_peak(trace);

        const std::optional<double> pred_plus = ext.forward ? std::optional<double>(L + *ext.forward) : std::nullopt;
        const double pred_minus = L + ext.backward;

        nlohmann::json doc;
        doc["schema_version"] = schema_version;
        doc["config"] = snapshot_to_json(ConfigSnapshot::from(cfg, sc));
        doc["predicted"] = {
            {"ratio", ext.ratio},
            {"b_min", b_min},
            {"forward_extent", optional_dual(ext.forward, lam)},
            {"backward_extent", dual(ext.backward, lam)},
            {"l_plus", optional_dual(pred_plus, lam)},
            {"l_minus", dual(pred_minus, lam)},
            {"b_at_l_plus", pred_plus ? nlohmann::json(lobe_parameters(cfg, L, *pred_plus).b) : nlohmann::json(nullptr)},
            {"b_at_l_minus", lobe_parameters(cfg, L, pred_minus).b},
        };
        doc["measured"] = {
            {"grid", {{"min", dual(grid.front(), lam)}, {"max", dual(grid.back(), lam)}, {"step", dual(lam, lam)},
                      {"points", points}}},
            {"l_plus", optional_dual(minima.l_plus, lam)},
            {"l_minus", optional_dual(minima.l_minus, lam)},
            {"peak", dual(peak.l, lam)},
        };
        const auto gap_plus = pred_plus ? relative_gap(minima.l_plus, *pred_plus) : std::nullopt;
        const auto gap_minus = relative_gap(minima.l_minus, pred_minus);
        doc["relative_gap"] = {
            {"l_plus", gap_plus ? nlohmann::json(*gap_plus) : nlohmann::json(nullptr)},
            {"l_minus", gap_minus ? nlohmann::json(*gap_minus) : nlohmann::json(nullptr)},
        };
        return doc;
    }

    RunResult run(const RunConfig &rc)
    {
        RunResult result;
        Writer w(rc, result);
        w.text("run_config.json", dump_json(w.run_json()));
        switch (rc.command)
        {
        case Command::zsweep:
            run_zsweep(rc, w, result);
            break;
        case Command::noise:
            run_noise(rc, w);
            break;
        case Command::deviation:
            run_deviation(rc, w, result);
            break;
        case Command::sensitivity:
            run_sensitivity(rc, w);
            break;
        case Command::lobes:
            w.json("lobes.json", lobe_report(rc.array(), rc.scenario()));
            break;
        case Command::emulate:
            run_emulate(rc, w);
            break;
        case Command::compare:
            run_compare(rc, w);
            break;
        }
        return result;
    }
}
