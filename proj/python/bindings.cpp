// Copyright 2026 The gaussfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussfactor/core_math.hpp"
#include "gaussfactor/errors.hpp"
#include "gaussfactor/methods.hpp"
#include "gaussfactor/report.hpp"
#include "gaussfactor/scanner.hpp"
#include "gaussfactor/spin.hpp"

namespace py = pybind11;
using namespace gaussfactor;

namespace {

void bind_core_math(py::module_ &m) {
    py::class_<FactorizationTarget>(m, "FactorizationTarget")
        .def(py::init<std::uint64_t, unsigned>(), py::arg("n"), py::arg("exponent") = 2)
        .def_property_readonly("n", &FactorizationTarget::n)
        .def_property_readonly("exponent", &FactorizationTarget::exponent)
        .def("__repr__", [](const FactorizationTarget &t) {
            return "FactorizationTarget(n=" + std::to_string(t.n()) +
                   ", exponent=" + std::to_string(t.exponent()) + ")";
        });

    py::class_<PhaseSchedule>(m, "PhaseSchedule")
        .def_readonly("j", &PhaseSchedule::j)
        .def_readonly("truncation", &PhaseSchedule::truncation)
        .def_readonly("residues", &PhaseSchedule::residues)
        .def_readonly("phases", &PhaseSchedule::phases);

    py::class_<GaussSumValue>(m, "GaussSumValue")
        .def_readonly("re", &GaussSumValue::re)
        .def_readonly("im", &GaussSumValue::im)
        .def_readonly("magnitude", &GaussSumValue::magnitude)
        .def("__complex__", [](const GaussSumValue &v) { return std::complex<double>(v.re, v.im); });

    m.def("phase_schedule", &phase_schedule, py::arg("target"), py::arg("j"), py::arg("M"),
          py::arg("max_terms") = kDefaultMaxTerms);
    m.def("gauss_sum_exact", &gauss_sum_exact, py::arg("target"), py::arg("j"), py::arg("M"),
          py::arg("max_terms") = kDefaultMaxTerms);
    m.def("is_exact_factor", &is_exact_factor, py::arg("n"), py::arg("j"));
    m.def("is_prime", &is_prime, py::arg("n"));
}

void bind_spin(py::module_ &m) {
    py::class_<BlochState>(m, "BlochState")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) { return BlochState{x, y, z}; }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &BlochState::x)
        .def_readwrite("y", &BlochState::y)
        .def_readwrite("z", &BlochState::z)
        .def("norm", &BlochState::norm)
        .def("transverse", &BlochState::transverse)
        .def("__repr__", [](const BlochState &s) {
            return "BlochState(" + std::to_string(s.x) + ", " + std::to_string(s.y) + ", " +
                   std::to_string(s.z) + ")";
        });

    py::class_<Rotation>(m, "Rotation")
        .def(py::init<>())
        .def_static("from_axis_angle", &Rotation::from_axis_angle, py::arg("axis"),
                    py::arg("angle"))
        .def("__mul__", &Rotation::operator*)
        .def("inverse", &Rotation::inverse)
        .def("apply", &Rotation::apply)
        .def("matrix", &Rotation::matrix)
        .def("angle", &Rotation::angle)
        .def("axis", &Rotation::axis)
        .def("quaternion", &Rotation::quaternion);

    m.def("pulse", &pulse, py::arg("theta"), py::arg("phi"));
    m.def("z_rotation", &z_rotation, py::arg("alpha"));
    m.def("compose", [](const std::vector<Rotation> &seq) { return compose(seq); },
          py::arg("seq"));
    m.def("apply", [](const Rotation &r, const BlochState &s) { return r.apply(s); });
}

void bind_methods(py::module_ &m) {
    py::class_<DifferentialParams>(m, "DifferentialParams")
        .def(py::init([](double theta, bool normalize) {
                 return DifferentialParams{theta, normalize};
             }),
             py::arg("theta") = DifferentialParams{}.theta, py::arg("normalize") = true)
        .def_readwrite("theta", &DifferentialParams::theta)
        .def_readwrite("normalize", &DifferentialParams::normalize);

    py::class_<SpatialParams>(m, "SpatialParams")
        .def(py::init([](std::uint32_t n_slices, std::uint32_t windings) {
                 return SpatialParams{n_slices, windings};
             }),
             py::arg("n_slices") = 256, py::arg("windings") = 1)
        .def_readwrite("n_slices", &SpatialParams::n_slices)
        .def_readwrite("windings", &SpatialParams::windings);

    py::class_<SignalSample>(m, "SignalSample")
        .def_readonly("j", &SignalSample::j)
        .def_readonly("raw_transverse", &SignalSample::raw_transverse)
        .def_readonly("normalized", &SignalSample::normalized);

    m.def("reference_signal", &reference_signal, py::arg("M"), py::arg("theta"));
    m.def("simulate_differential", &simulate_differential, py::arg("target"), py::arg("j"),
          py::arg("M"), py::arg("params") = DifferentialParams{},
          py::arg("max_terms") = kDefaultMaxTerms);
    m.def("simulate_spatial", &simulate_spatial, py::arg("target"), py::arg("j"), py::arg("M"),
          py::arg("params") = SpatialParams{}, py::arg("max_terms") = kDefaultMaxTerms);
    m.def("spatial_flip_angle", &spatial_flip_angle, py::arg("M"));
    m.def("dephased_average", &dephased_average, py::arg("params") = SpatialParams{});
}

void bind_scanner(py::module_ &m) {
    py::enum_<Method>(m, "Method")
        .value("differential", Method::differential)
        .value("spatial", Method::spatial);

    py::class_<ScanConfig>(m, "ScanConfig")
        .def(py::init([](MethodParams params, std::uint64_t j_min, std::uint64_t j_max,
                         std::uint64_t M, double threshold, unsigned jobs) {
                 ScanConfig cfg;
                 cfg.params = std::move(params);
                 cfg.j_min = j_min;
                 cfg.j_max = j_max;
                 cfg.M = M;
                 cfg.threshold = threshold;
                 cfg.jobs = jobs;
                 return cfg;
             }),
             py::arg("params"), py::arg("j_min"), py::arg("j_max"), py::arg("M"),
             py::arg("threshold") = 0.7, py::arg("jobs") = 1)
        .def_readwrite("params", &ScanConfig::params)
        .def_readwrite("j_min", &ScanConfig::j_min)
        .def_readwrite("j_max", &ScanConfig::j_max)
        .def_readwrite("M", &ScanConfig::M)
        .def_readwrite("threshold", &ScanConfig::threshold)
        .def_readwrite("jobs", &ScanConfig::jobs)
        .def_property_readonly("method", &ScanConfig::method);

    py::class_<ScanRecord>(m, "ScanRecord")
        .def_readonly("j", &ScanRecord::j)
        .def_readonly("normalized", &ScanRecord::normalized)
        .def_readonly("raw_transverse", &ScanRecord::raw_transverse)
        .def_readonly("classified", &ScanRecord::classified)
        .def_readonly("arithmetic_check", &ScanRecord::arithmetic_check)
        .def_readonly("error", &ScanRecord::error);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("n", &ScanResult::n)
        .def_readonly("M", &ScanResult::M)
        .def_readonly("threshold", &ScanResult::threshold)
        .def_readonly("records", &ScanResult::records)
        .def_readonly("warnings", &ScanResult::warnings)
        .def_property_readonly("method", &ScanResult::method)
        .def("classified_factors", &ScanResult::classified_factors)
        .def("to_csv", [](const ScanResult &r) { return to_csv(r); })
        .def("to_json", [](const ScanResult &r) { return to_json(r).dump(); })
        .def("plot_data", [](const ScanResult &r) { return plot_data(r); });

    py::class_<FactorEntry>(m, "FactorEntry")
        .def_readonly("value", &FactorEntry::value)
        .def_readonly("multiplicity", &FactorEntry::multiplicity)
        .def_readonly("prime", &FactorEntry::prime)
        .def("__repr__", [](const FactorEntry &f) {
            return "FactorEntry(" + std::to_string(f.value) + ", " +
                   std::to_string(f.multiplicity) + ")";
        });

    m.def("classify", &classify, py::arg("sample"), py::arg("threshold"));
    m.def("scan", &scan, py::arg("target"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("full_factorize", &full_factorize, py::arg("target"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("format_factorization", &format_factorization, py::arg("factors"));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gauss-sum factorization through simulated NMR pulse sequences";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NormalizationError>(m, "NormalizationError", PyExc_RuntimeError);

    bind_core_math(m);
    bind_spin(m);
    bind_methods(m);
    bind_scanner(m);
}
