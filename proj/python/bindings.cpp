#include <optional>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylkit/core.hpp"
#include "weylkit/dynamics.hpp"
#include "weylkit/inverse.hpp"
#include "weylkit/io.hpp"
#include "weylkit/self_check.hpp"
#include "weylkit/series.hpp"
#include "weylkit/spectral.hpp"

namespace py = pybind11;
using namespace weylkit;

namespace {

std::vector<std::vector<double>> field_rows(const WaveField& field) {
  std::vector<std::vector<double>> rows;
  for (int t = 0; t <= field.horizon(); ++t) {
    std::vector<double> row;
    for (int n = 0; n <= field.row_extent(t); ++n) row.push_back(field.at(n, t));
    rows.push_back(std::move(row));
  }
  return rows;
}

SpectralPoint point_of(Complex lambda) { return lambda_to_z(lambda); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weyl functions of Jacobi matrices from discrete wave-system response vectors";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<JacobiCoefficients>(m, "Coefficients")
      .def(py::init<std::vector<double>, std::vector<double>, double, double, std::optional<int>>(),
           py::arg("a"), py::arg("b"), py::arg("tail_a") = 1.0, py::arg("tail_b") = 0.0,
           py::arg("N") = std::nullopt)
      .def_static("free", &JacobiCoefficients::free)
      .def("a", &JacobiCoefficients::a)
      .def("b", &JacobiCoefficients::b)
      .def_property_readonly("tail_a", &JacobiCoefficients::tail_a)
      .def_property_readonly("tail_b", &JacobiCoefficients::tail_b)
      .def_property_readonly("N", &JacobiCoefficients::size);

  py::class_<RegionSpec>(m, "RegionSpec")
      .def_readonly("B", &RegionSpec::B)
      .def_readonly("R", &RegionSpec::R)
      .def_property_readonly("z_radius", &RegionSpec::z_radius)
      .def_static("from_bound", &RegionSpec::from_bound);

  py::class_<SpectralPoint>(m, "SpectralPoint")
      .def_readonly("lam", &SpectralPoint::lambda)
      .def_readonly("z", &SpectralPoint::z)
      .def_readonly("on_cut", &SpectralPoint::on_cut);

  py::class_<SeriesEvaluation>(m, "SeriesEvaluation")
      .def_readonly("value", &SeriesEvaluation::value)
      .def_readonly("terms_used", &SeriesEvaluation::terms_used)
      .def_readonly("tail_bound", &SeriesEvaluation::tail_bound);

  m.def(
      "lambda_to_z",
      [](Complex lambda, bool relaxed) {
        return lambda_to_z(lambda, relaxed ? BranchMode::relaxed : BranchMode::strict);
      },
      py::arg("lam"), py::arg("relaxed") = false);
  m.def("z_to_lambda", &z_to_lambda, py::arg("z"));
  m.def("entry_bound", &entry_bound, py::arg("coeffs"));
  m.def("in_convergence_region", &in_convergence_region, py::arg("lam"), py::arg("region"));
  m.def("region_boundary_curve", &region_boundary_curve, py::arg("region"), py::arg("samples"));

  m.def(
      "simulate",
      [](const JacobiCoefficients& c, int T, std::vector<double> control, std::optional<int> N) {
        const ControlSequence f{std::move(control)};
        return field_rows(N ? simulate_finite(c, *N, f, T) : simulate_semi_infinite(c, f, T));
      },
      py::arg("coeffs"), py::arg("T"), py::arg("control") = std::vector<double>{1.0},
      py::arg("N") = std::nullopt,
      "Rows t = 0..T of the wave field; row t lists sites n = 0..min(t, N).");
  m.def(
      "response_vector",
      [](const JacobiCoefficients& c, int T, std::optional<int> N) {
        return (N ? response_vector_finite(c, *N, T) : response_vector(c, T)).entries;
      },
      py::arg("coeffs"), py::arg("T"), py::arg("N") = std::nullopt);
  m.def(
      "convolve",
      [](std::vector<double> f, std::vector<double> g) {
        return convolve({std::move(f)}, {std::move(g)}).values;
      },
      py::arg("f"), py::arg("g"));
  m.def(
      "apply_response",
      [](std::vector<double> r, std::vector<double> f) {
        return apply_response({std::move(r)}, {std::move(f)}).values;
      },
      py::arg("r"), py::arg("f"));
  m.def(
      "goursat_residual",
      [](const JacobiCoefficients& c, int T) {
        const auto u = simulate_semi_infinite<Quad>(c, ControlSequence::delta(), T);
        return to_double(verify_goursat(goursat_kernel(u), c));
      },
      py::arg("coeffs"), py::arg("T"), "Goursat residual of the kernel, computed in float128.");
  m.def(
      "amplitude_bound",
      [](const JacobiCoefficients& c, int T) {
        return amplitude_bound_report(simulate_semi_infinite(c, ControlSequence::delta(), T),
                                      entry_bound(c));
      },
      py::arg("coeffs"), py::arg("T"));

  m.def(
      "weyl",
      [](const JacobiCoefficients& c, int N, Complex lambda, const std::string& method) {
        return weyl_finite(c, N, lambda, parse_weyl_method(method)).value;
      },
      py::arg("coeffs"), py::arg("N"), py::arg("lam"), py::arg("method") = "resolvent");
  m.def("free_weyl_finite", &free_weyl_finite, py::arg("N"), py::arg("lam"));
  m.def("chebyshev_U", &chebyshev_U, py::arg("n"), py::arg("x"));
  m.def("free_spectral_density", &free_spectral_density, py::arg("lam"));

  m.def(
      "weyl_series",
      [](std::vector<double> r, Complex lambda, const RegionSpec& region, bool literal) {
        return weyl_series({std::move(r)}, point_of(lambda), region,
                           literal ? SeriesConvention::literal : SeriesConvention::shifted);
      },
      py::arg("r"), py::arg("lam"), py::arg("region"), py::arg("literal") = false);
  m.def("weyl_semi_infinite", &weyl_semi_infinite, py::arg("coeffs"), py::arg("lam"),
        py::arg("tol"));
  m.def("weyl_finite_series", &weyl_finite_series, py::arg("coeffs"), py::arg("N"),
        py::arg("lam"), py::arg("tol"));
  m.def(
      "verify_hat_equation",
      [](const JacobiCoefficients& c, Complex lambda, int T, std::optional<int> N) {
        return verify_hat_equation(c, point_of(lambda), T, N);
      },
      py::arg("coeffs"), py::arg("lam"), py::arg("T"), py::arg("N") = std::nullopt);
  m.def("hat_residual_bound", &hat_residual_bound, py::arg("ratio"), py::arg("T"));
  m.def(
      "convergence_table",
      [](const JacobiCoefficients& c, Complex lambda, const std::vector<int>& Ns) {
        std::vector<py::tuple> out;
        for (const auto& row : convergence_table(c, lambda, Ns)) {
          out.push_back(py::make_tuple(row.N, row.m_finite, row.deviation, row.bound));
        }
        return out;
      },
      py::arg("coeffs"), py::arg("lam"), py::arg("Ns"),
      "List of (N, m^N, |m^N - m|, bound).");

  m.def(
      "response_from_weyl",
      [](std::function<Complex(Complex)> oracle, const RegionSpec& region, int T,
         std::optional<double> rho, std::optional<int> K) {
        WeylOracle w{std::move(oracle), nullptr, region};
        const ExtractedResponse e = response_from_weyl(
            w, T, rho.value_or(default_contour_radius(region)), K.value_or(default_contour_nodes(T)));
        return py::make_tuple(e.r.entries, e.imag_residue);
      },
      py::arg("oracle"), py::arg("region"), py::arg("T"), py::arg("rho") = std::nullopt,
      py::arg("K") = std::nullopt,
      "Taylor coefficients of a Python callable m(lam); returns (r, imag_residue).");
  m.def(
      "response_from_resolvent",
      [](const JacobiCoefficients& c, int N, int T, std::optional<double> rho,
         std::optional<int> K) {
        const WeylOracle w = resolvent_oracle(c, N);
        const ExtractedResponse e = response_from_weyl(
            w, T, rho.value_or(default_contour_radius(w.region)), K.value_or(default_contour_nodes(T)));
        return py::make_tuple(e.r.entries, e.imag_residue);
      },
      py::arg("coeffs"), py::arg("N"), py::arg("T"), py::arg("rho") = std::nullopt,
      py::arg("K") = std::nullopt);
  m.def("roundtrip_report", &roundtrip_report, py::arg("coeffs"), py::arg("N"), py::arg("T"));
  m.def(
      "leading_coefficients",
      [](std::vector<double> r) {
        const LeadingCoefficients lc = leading_coefficients({std::move(r)});
        return py::make_tuple(lc.a1, lc.b1);
      },
      py::arg("r"), "(a_1, b_1) from the first three response entries.");

  m.def("load_coefficients", &io::load_coefficients, py::arg("path"));
  m.def("parse_coefficients", &io::parse_coefficients, py::arg("json_text"));
  m.def(
      "self_check",
      [](const std::vector<JacobiCoefficients>& fixtures) {
        std::vector<py::tuple> out;
        for (const auto& r : run_self_check(fixtures)) {
          out.push_back(py::make_tuple(r.name, r.passed, r.detail));
        }
        return out;
      },
      py::arg("fixtures") = std::vector<JacobiCoefficients>{});
}
