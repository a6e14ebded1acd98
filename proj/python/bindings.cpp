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

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/cli/run_config.hpp"
#include "sparsefocus/cli/runner.hpp"
#include "sparsefocus/closed_form.hpp"
#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/fresnel.hpp"
#include "sparsefocus/pathloss.hpp"
#include "sparsefocus/presets.hpp"
#include "sparsefocus/sweeps.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace sf = sparsefocus;

namespace
{
    sf::ModelSpec make_model(const std::string &name, double sigma_phi, double delta_x, double delta_y,
                             std::size_t trials, std::uint64_t seed, double ple)
    {
        if (name == "exact")
            return sf::ExactModel{};
        if (name == "closed_form")
            return sf::ClosedFormModel{};
        if (name == "noisy_expectation")
            return sf::NoisyExpectationModel{{sigma_phi}};
        if (name == "noisy_mc")
            return sf::NoisyMonteCarloModel{{sigma_phi}, trials, seed};
        if (name == "deviated")
            return sf::DeviatedModel{{delta_x, delta_y}};
        if (name == "deviated_taylor")
            return sf::DeviatedTaylorModel{{delta_x, delta_y}};
        if (name == "emulated")
            return sf::EmulatedModel{{ple, 1.0, 0.0}, {sigma_phi}, seed};
        throw std::invalid_argument("unknown model '" + name + "'");
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Near-field power focusing of sparse planar arrays";

    py::register_exception<sf::cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<sf::ArrayConfig>(m, "ArrayConfig")
        .def(py::init<std::size_t, double, double>(), py::arg("side_count"), py::arg("spacing"),
             py::arg("wavelength"))
        .def_property_readonly("side_count", &sf::ArrayConfig::side_count)
        .def_property_readonly("element_count", &sf::ArrayConfig::element_count)
        .def_property_readonly("spacing", &sf::ArrayConfig::spacing)
        .def_property_readonly("wavelength", &sf::ArrayConfig::wavelength)
        .def_property_readonly("wavenumber", &sf::ArrayConfig::wavenumber);

    py::class_<sf::FocusScenario>(m, "FocusScenario")
        .def(py::init([](double L, double P) { return sf::FocusScenario{L, P}; }), py::arg("focal_distance"),
             py::arg("transmit_power") = 1.0)
        .def_readwrite("focal_distance", &sf::FocusScenario::focal_distance)
        .def_readwrite("transmit_power", &sf::FocusScenario::transmit_power);

    py::class_<sf::PowerTrace>(m, "PowerTrace")
        .def_readonly("grid", &sf::PowerTrace::grid)
        .def_readonly("values", &sf::PowerTrace::values)
        .def_readonly("normalized", &sf::PowerTrace::normalized)
        .def_property_readonly("tag", [](const sf::PowerTrace &t) { return std::string(sf::to_string(t.tag)); })
        .def("__len__", &sf::PowerTrace::size);

    py::class_<sf::LobeExtent>(m, "LobeExtent")
        .def_readonly("forward", &sf::LobeExtent::forward)
        .def_readonly("backward", &sf::LobeExtent::backward)
        .def_readonly("ratio", &sf::LobeExtent::ratio);

    m.attr("b_min") = sf::b_min;
    m.attr("speed_of_light") = sf::speed_of_light;

    m.def("fresnel", [](double x) { auto p = sf::fresnel(x); return py::make_tuple(p.c, p.s); }, py::arg("x"),
          "(C(x), S(x)) with the pi t^2 / 2 kernel");
    m.def("received_power", &sf::received_power, py::arg("array"), py::arg("scenario"), py::arg("l"));
    m.def("approx_power", &sf::approx_power, py::arg("array"), py::arg("scenario"), py::arg("l"));
    m.def("expected_power_noisy",
          [](const sf::ArrayConfig &a, const sf::FocusScenario &s, double l, double sigma)
          { return sf::expected_power_noisy(a, s, l, {sigma}); },
          py::arg("array"), py::arg("scenario"), py::arg("l"), py::arg("sigma_phi"));
    m.def("received_power_deviated",
          [](const sf::ArrayConfig &a, const sf::FocusScenario &s, double l, double dx, double dy)
          { return sf::received_power_deviated(a, s, l, {dx, dy}); },
          py::arg("array"), py::arg("scenario"), py::arg("l"), py::arg("delta_x"), py::arg("delta_y"));
    m.def("main_lobe_extent", &sf::main_lobe_extent, py::arg("array"), py::arg("focal_distance"));
    m.def("fspl_db", &sf::fspl_db, py::arg("distance"), py::arg("wavelength"));
    m.def("log_grid", &sf::log_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
    m.def("linear_grid", &sf::linear_grid, py::arg("lo"), py::arg("hi"), py::arg("count"));
    m.def(
        "z_sweep",
        [](const sf::ArrayConfig &a, const sf::FocusScenario &s, const std::vector<double> &grid,
           const std::string &model, double sigma_phi, double delta_x, double delta_y, std::size_t trials,
           std::uint64_t seed, double ple)
        {
            const auto spec = make_model(model, sigma_phi, delta_x, delta_y, trials, seed, ple);
            py::gil_scoped_release release;
            return sf::z_sweep(a, s, grid, spec);
        },
        py::arg("array"), py::arg("scenario"), py::arg("grid"), py::arg("model") = "exact",
        py::arg("sigma_phi") = 0.0, py::arg("delta_x") = 0.0, py::arg("delta_y") = 0.0, py::arg("trials") = 0,
        py::arg("seed") = 0, py::arg("ple") = 2.0);
    m.def("find_peak", [](const sf::PowerTrace &t) { auto p = sf::find_peak(t); return py::make_tuple(p.l, p.value, p.index); });
    m.def("preset_names",
          []
          {
              std::vector<std::string> names;
              for (const auto &p : sf::presets())
                  names.push_back(p.name);
              return names;
          });
    m.def(
        "run",
        [](const std::string &config_text)
        {
            const auto rc = sf::cli::parse_config(config_text);
            sf::cli::RunResult r;
            {
                py::gil_scoped_release release;
                r = sf::cli::run(rc);
            }
            std::vector<std::string> files;
            for (const auto &f : r.files)
                files.push_back(f.string());
            return files;
        },
        py::arg("config_text"), "Run a 'key = value' config document; returns the written file paths");
}
