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
#include "sparsefocus/cli/runner.hpp"
#include "sparsefocus/cli/trace_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sparsefocus;
using namespace sparsefocus::cli;
namespace fs = std::filesystem;

namespace
{
    constexpr double lam = 2.998e8 / 300e9;

    fs::path scratch(const std::string &name)
    {
        const auto p = fs::temp_directory_path() / ("sparsefocus_unit_" + name);
        fs::remove_all(p);
        return p;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    std::string message_of(const std::string &text)
    {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return e.what();
        }
        return "";
    }
}

TEST_CASE("preset resolution")
{
    const auto rc = parse_config("command = zsweep\npreset = fig2b\n");
    CHECK(rc.command == Command::zsweep);
    CHECK(rc.side_count == 7);
    CHECK(rc.spacing == doctest::Approx(15 * lam).epsilon(1e-15));
    CHECK(rc.focal_distance == doctest::Approx(700 * lam).epsilon(1e-15));
    CHECK(rc.frequency_hz == 300e9);
    CHECK(rc.transmit_power == 1.0);
    CHECK(rc.grid().size() == 400);
    CHECK(rc.grid_min == doctest::Approx(350 * lam).epsilon(1e-15));
    CHECK_FALSE(rc.seed);
}

TEST_CASE("lengths in wavelengths")
{
    const auto rc = parse_config("command = zsweep\nfrequency = 300e9\nside_count = 7\nspacing = 15lam\nfocal = 700lam\n");
    CHECK(rc.wavelength == doctest::Approx(0.99933333e-3).epsilon(1e-7));
    // c = 2.998e8 gives 0.69953 m; the 0.69951 quoted alongside the example rounds c differently
    CHECK(rc.focal_distance == doctest::Approx(0.69951).epsilon(1e-4));
    CHECK(rc.focal_distance == doctest::Approx(700 * 2.998e8 / 300e9).epsilon(1e-15));

    const auto ghz = parse_config("command = zsweep\nfrequency = 300GHz\nside_count = 7\nspacing = 0.015m\nfocal = 0.7\n");
    CHECK(ghz.wavelength == rc.wavelength);
    CHECK(ghz.spacing == 0.015);
    CHECK(ghz.focal_distance == 0.7);

    const auto wl = parse_config("command = lobes\nwavelength = 1e-3\nside_count = 3\nspacing = 2lam\nfocal = 100lam\n");
    CHECK(wl.spacing == 2e-3);
    CHECK(wl.frequency_hz == doctest::Approx(2.998e11).epsilon(1e-15));
}

TEST_CASE("config errors name the key and line")
{
    CHECK(message_of("command = noise\npreset = fig5\ntrials = 100\n").find("seed") != std::string::npos);
    CHECK(message_of("command = zsweep\npreset = fig2b\nmodel = noisy_mc\ntrials = 10\n").find("seed") !=
          std::string::npos);
    CHECK(message_of("command = emulate\npreset = fig3\nsigma_phi = 0.2\n").find("seed") != std::string::npos);
    CHECK(message_of("command = emulate\npreset = fig3\n").empty()); // fully deterministic: no seed needed

    const auto unknown = message_of("command = zsweep\npreset = fig2b\n\ncolour = red\n");
    CHECK(unknown.find("line 4") != std::string::npos);
    CHECK(unknown.find("colour") != std::string::npos);

    const auto neg = message_of("command = zsweep\npreset = fig2b\nspacing = -3lam\n");
    CHECK(neg.find("line 3") != std::string::npos);
    CHECK(neg.find("spacing") != std::string::npos);

    const auto zero = message_of("command = zsweep\npreset = fig2b\n# comment\nfocal = 0\n");
    CHECK(zero.find("line 4") != std::string::npos);
    CHECK(zero.find("focal") != std::string::npos);

    CHECK(message_of("preset = fig2b\n").find("command") != std::string::npos);
    CHECK(message_of("command = zsweep\nside_count = 7\nspacing = 1lam\nfocal = 9lam\n").find("frequency") !=
          std::string::npos);
    CHECK(message_of("command = zsweep\nfrequency = 3e11\nspacing = 1lam\nfocal = 9lam\n").find("side_count") !=
          std::string::npos);
    CHECK(message_of("command = fly\npreset = fig2b\n").find("command") != std::string::npos);
    CHECK(message_of("command = zsweep\npreset = nope\n").find("preset") != std::string::npos);
    CHECK(message_of("command = zsweep\npreset = fig2b\nfocal = abc\n").find("focal") != std::string::npos);
    CHECK(message_of("command = zsweep\npreset = fig2b\nside_count = 2.5\n").find("side_count") !=
          std::string::npos);
    CHECK(message_of("command = zsweep\npreset = fig2b\npower = 0\n").find("power") != std::string::npos);
    CHECK(message_of("command = zsweep\ncommand = noise\n").find("duplicate") != std::string::npos);
    CHECK(message_of("command zsweep\n").find("line 1") != std::string::npos);
    CHECK(message_of("command = zsweep\npreset = fig2b\nformat = xml\n").find("format") != std::string::npos);
}

TEST_CASE("flags override the config file")
{
    auto base = parse_settings("command = zsweep\npreset = fig2b\nmodel = exact\n");
    const auto rc = resolve(merge_settings(base, {{"model", {"closed_form", 0}}, {"seed", {"5", 0}}}));
    CHECK(rc.model == "closed_form");
    CHECK(rc.seed == 5u);
    const auto msg = [&]
    {
        try
        {
            resolve(merge_settings(base, {{"spacing", {"-1", 0}}}));
        }
        catch (const ConfigError &e)
        {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(msg.find("--spacing") != std::string::npos);
}

TEST_CASE("trace serialization")
{
    const ArrayConfig cfg(7, 15 * lam, lam);
    const FocusScenario sc{700 * lam, 1.0};
    auto t = z_sweep(cfg, sc, log_grid(350 * lam, 2100 * lam, 37), NoisyMonteCarloModel{{0.3}, 20, 4});
    const auto dir = scratch("io");
    fs::create_directories(dir);

    write_trace(t, OutputFormat::json, dir / "t.json");
    const auto back = read_trace_json(dir / "t.json");
    CHECK(back == t);
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(std::memcmp(&back.values[i], &t.values[i], sizeof(double)) == 0);
    CHECK_FALSE(fs::exists(dir / "t.json.tmp"));

    const auto doc = read_json(dir / "t.json");
    for (const char *key : {"schema_version", "config", "grid", "values", "tag"})
        CHECK(doc.contains(key));

    write_trace(t, OutputFormat::csv, dir / "t.csv");
    const auto csv = slurp(dir / "t.csv");
    CHECK(csv.rfind("l_m,l_over_lambda,power_w,model\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 38);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find(",noisy_mc\n") != std::string::npos);

    const auto norm = peak_normalized(t);
    CHECK(trace_to_csv(norm).rfind("l_m,l_over_lambda,power_norm,model\n", 0) == 0);
    CHECK(format_double(0.1) == "0.10000000000000001");

    PowerTrace empty;
    empty.config = t.config;
    CHECK_THROWS_AS(write_trace(empty, OutputFormat::csv, dir / "e.csv"), std::invalid_argument);
    CHECK_FALSE(fs::exists(dir / "e.csv"));
    CHECK_THROWS_WITH(write_trace(t, OutputFormat::csv, dir / "missing" / "x.csv"), doctest::Contains("missing"));
    fs::remove_all(dir);
}

TEST_CASE("run: zsweep writes the trace and the resolved configuration")
{
    auto rc = parse_config("command = zsweep\npreset = fig2b\n");
    rc.out_dir = scratch("zsweep").string();
    const auto res = run(rc);
    REQUIRE(res.files.size() == 2);
    const auto csv = slurp(fs::path(rc.out_dir) / "zsweep_exact.csv");
    CHECK(csv.rfind("l_m,l_over_lambda,power_w,model\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 401);
    const auto cfgdoc = read_json(fs::path(rc.out_dir) / "run_config.json");
    CHECK(cfgdoc["side_count"] == 7);
    CHECK(cfgdoc["seed"].is_null());
    CHECK(cfgdoc["grid"]["points"] == 400);
    fs::remove_all(rc.out_dir);
}

TEST_CASE("run: outputs are byte-identical across re-runs")
{
    for (const char *text : {"command = noise\npreset = fig5\ntrials = 200\nseed = 11\nformat = json\n",
                             "command = emulate\npreset = fig3\nsigma_phi = 0.2\nshadow_sigma_db = 1\nseed = 3\n"})
    {
        auto a = parse_config(text), b = a;
        a.out_dir = scratch("rep_a").string();
        b.out_dir = scratch("rep_b").string();
        const auto ra = run(a), rb = run(b);
        REQUIRE(ra.files.size() == rb.files.size());
        for (std::size_t i = 0; i < ra.files.size(); ++i)
        {
            CHECK(ra.files[i].filename() == rb.files[i].filename());
            CHECK(slurp(ra.files[i]) == slurp(rb.files[i]));
        }
        const auto doc = read_json(fs::path(a.out_dir) / "run_config.json");
        CHECK_FALSE(doc["seed"].is_null());
        fs::remove_all(a.out_dir);
        fs::remove_all(b.out_dir);
    }
}

TEST_CASE("run: lobes report")
{
    auto rc = parse_config("command = lobes\npreset = fig2b\n");
    rc.out_dir = scratch("lobes").string();
    run(rc);
    const auto doc = read_json(fs::path(rc.out_dir) / "lobes.json");
    CHECK(std::abs(doc["predicted"]["forward_extent"]["lambda"].get<double>() - 470.3) <= 0.05);
    CHECK(std::abs(doc["predicted"]["backward_extent"]["lambda"].get<double>() + 200.7) <= 0.05);
    CHECK(doc["measured"]["l_minus"]["lambda"].get<double>() == doctest::Approx(479).epsilon(3e-3));
    CHECK(doc["measured"]["l_plus"]["lambda"].get<double>() == doctest::Approx(1327).epsilon(3e-3));
    CHECK(doc["relative_gap"]["l_minus"].get<double>() == doctest::Approx(-0.041).epsilon(0.05));
    CHECK(doc["relative_gap"]["l_plus"].get<double>() == doctest::Approx(0.134).epsilon(0.05));
    CHECK(doc["config"].contains("run"));
    fs::remove_all(rc.out_dir);
}

TEST_CASE("run: compare")
{
    auto rc = parse_config("command = compare\npreset = fig2a\n");
    rc.out_dir = scratch("compare").string();
    run(rc);
    const auto doc = read_json(fs::path(rc.out_dir) / "compare.json");
    for (const char *key : {"max_relative_error", "rms_relative_error", "peak_shift", "points"})
        CHECK(doc["comparison"].contains(key));
    CHECK(doc["tags"][1] == "closed_form");

    // two trace files from disk
    auto z1 = parse_config("command = zsweep\npreset = fig2b\nformat = json\n");
    auto z2 = parse_config("command = zsweep\npreset = fig2b\nformat = json\nmodel = closed_form\n");
    z1.out_dir = z2.out_dir = rc.out_dir;
    run(z1);
    run(z2);
    auto cmp = parse_config("command = compare\npreset = fig2b\ninputs = " + rc.out_dir + "/zsweep_exact.json, " +
                            rc.out_dir + "/zsweep_closed_form.json\ncompare_window = full\n");
    cmp.out_dir = rc.out_dir;
    run(cmp);
    const auto d2 = read_json(fs::path(rc.out_dir) / "compare.json");
    CHECK(d2["comparison"]["points"] == 400);
    fs::remove_all(rc.out_dir);
}

TEST_CASE("run: deviation warns outside the small regime")
{
    auto rc = parse_config("command = deviation\npreset = fig6\ndeviations = 0, 1lam, 9lam\ngrid_points = 20\n");
    rc.out_dir = scratch("dev").string();
    const auto res = run(rc);
    CHECK(res.warnings.size() == 1);
    CHECK(res.files.size() == 4);
    fs::remove_all(rc.out_dir);
}

TEST_CASE("run: sensitivity table")
{
    auto rc = parse_config("command = sensitivity\npreset = fig7\n");
    rc.out_dir = scratch("sens").string();
    run(rc);
    const auto csv = slurp(fs::path(rc.out_dir) / "sensitivity.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 21);
    fs::remove_all(rc.out_dir);
}
