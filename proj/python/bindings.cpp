// Copyright 2026 The cdtising Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cdtising/coupled_oracle.hpp"
#include "cdtising/critical_region.hpp"
#include "cdtising/errors.hpp"
#include "cdtising/ising_strip.hpp"
#include "cdtising/params.hpp"
#include "cdtising/pure_spectrum.hpp"
#include "cdtising/sampler.hpp"
#include "cdtising/strip_geometry.hpp"

namespace py = pybind11;
using cdtising::Params;

namespace {

Params couplings(double beta, double mu) { return Params::from_couplings(beta, mu); }
Params fugacity(double g) { return Params::from_fugacity(g); }

py::dict spectral_dict(const cdtising::SpectralReport& r) {
  py::dict d;
  d["eigenvalue"] = r.principal_eigenvalue;
  d["residual"] = r.residual;
  d["second_modulus"] = r.second_modulus;
  d["gap"] = r.gap;
  d["iterations"] = r.iterations;
  d["eigenvector"] = r.eigenvector;
  d["left_eigenvector"] = r.left_eigenvector;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transfer-matrix tools for causal triangulations coupled to Ising spins";
  m.attr("__version__") = CDTISING_VERSION;

  auto base = py::register_exception<cdtising::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<cdtising::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<cdtising::ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<cdtising::ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<cdtising::DivergenceError>(m, "DivergenceError", base.ptr());
  py::register_exception<cdtising::NumericError>(m, "NumericError", base.ptr());
  py::register_exception<cdtising::BracketError>(m, "BracketError", base.ptr());
  py::register_exception<cdtising::IoError>(m, "IoError", base.ptr());

  // Strips.
  m.def("count_strips", [](long n_up, long n_down) {
    return py::int_(py::str(cdtising::count_strips(n_up, n_down).str()));
  }, py::arg("n_up"), py::arg("n_down"));
  m.def("enumerate_strips", [](int n_up, int n_down, int cap) {
    std::vector<std::string> out;
    for (const auto& t : cdtising::enumerate_strips(n_up, n_down, cap)) out.push_back(t.to_string());
    return out;
  }, py::arg("n_up"), py::arg("n_down"), py::arg("cap") = cdtising::kDefaultEnumerationCap);
  m.def("strip_energy", [](const std::string& strip, const std::vector<int>& spins) {
    return cdtising::strip_energy(cdtising::StripTriangulation::parse(strip),
                                  cdtising::SpinConfiguration(spins));
  }, py::arg("strip"), py::arg("spins"));

  // Pure CDT.
  m.def("lambda_pure", [](double g) { return cdtising::lambda_pure(fugacity(g)); }, py::arg("g"));
  m.def("u_entry", [](int n, int np, double g) { return cdtising::u_entry(n, np, fugacity(g)); },
        py::arg("n"), py::arg("n_prime"), py::arg("g"));
  m.def("row_sum_closed", [](int n, double g) { return cdtising::row_sum_closed(n, fugacity(g)); },
        py::arg("n"), py::arg("g"));
  m.def("truncated_U", [](double g, int n_max) {
    return cdtising::build_truncated_U(fugacity(g), n_max).entries;
  }, py::arg("g"), py::arg("n_max"));
  m.def("z_n_truncated", [](int N, double g, int n_max) {
    return cdtising::z_n_truncated(N, fugacity(g), n_max);
  }, py::arg("N"), py::arg("g"), py::arg("n_max"));
  m.def("eigen_residuals", [](double g, int n_max) {
    const auto r = cdtising::eigen_residuals(fugacity(g), n_max);
    return py::make_tuple(r.right, r.left);
  }, py::arg("g"), py::arg("n_max"));
  m.def("residual_truncation_rule", [](double g) {
    return cdtising::residual_truncation_rule(fugacity(g));
  }, py::arg("g"));

  // Strip matrices.
  m.def("matrix_T", [](double beta, double mu) { return cdtising::matrix_T(couplings(beta, mu)); },
        py::arg("beta"), py::arg("mu"));
  m.def("matrix_M", [](double beta, double mu) { return cdtising::matrix_M(couplings(beta, mu)); },
        py::arg("beta"), py::arg("mu"));
  m.def("matrix_Q", [](double beta, double mu) { return cdtising::build_Q_family(couplings(beta, mu)).q; },
        py::arg("beta"), py::arg("mu"));
  m.def("lambda_condition", [](double beta, double mu) {
    return cdtising::lambda_condition(couplings(beta, mu)).value;
  }, py::arg("beta"), py::arg("mu"));
  m.def("trace_KKT_closed", [](double beta, double mu) {
    return cdtising::trace_KKT_closed(couplings(beta, mu));
  }, py::arg("beta"), py::arg("mu"));

  // Coupled operator.
  m.def("truncated_K", [](double beta, double mu, int s_max) {
    return cdtising::build_truncated_K(couplings(beta, mu), s_max).entries;
  }, py::arg("beta"), py::arg("mu"), py::arg("s_max"));
  m.def("xi_n_truncated", [](int N, double beta, double mu, int s_max) {
    return cdtising::xi_n_truncated(N, couplings(beta, mu), s_max);
  }, py::arg("N"), py::arg("beta"), py::arg("mu"), py::arg("s_max"));
  m.def("trace_KKT_direct", [](double beta, double mu, int s_max) {
    return cdtising::trace_KKT_direct(couplings(beta, mu), s_max);
  }, py::arg("beta"), py::arg("mu"), py::arg("s_max"));
  m.def("principal_eigenvalue_K", [](double beta, double mu, int s_max) {
    return spectral_dict(cdtising::principal_eigenvalue_K(couplings(beta, mu), s_max));
  }, py::arg("beta"), py::arg("mu"), py::arg("s_max"));

  // Critical region.
  m.def("solve_boundary_mu", &cdtising::solve_boundary_mu, py::arg("beta"),
        py::arg("tol") = cdtising::kDefaultBoundaryTolerance);
  m.def("bound_lines", [](const std::vector<double>& grid, double tol) {
    py::dict out;
    for (const auto& c : cdtising::bound_lines(grid, tol)) {
      std::vector<double> mu;
      for (const auto& pt : c.points) mu.push_back(pt.mu);
      out[py::str(std::string(cdtising::curve_name(c.id)))] = mu;
    }
    return out;
  }, py::arg("beta_grid"), py::arg("tol") = cdtising::kDefaultBoundaryTolerance);
  m.def("region_classify", [](double beta, double mu) {
    return std::string(cdtising::region_name(cdtising::region_classify(couplings(beta, mu))));
  }, py::arg("beta"), py::arg("mu"));

  // Sampler.
  m.def("transition_row", [](int n, double g, int n_cap) {
    auto row = cdtising::transition_row(n, g, n_cap);
    return py::make_tuple(row.probs, row.tail);
  }, py::arg("n"), py::arg("g"), py::arg("n_cap") = cdtising::kDefaultWidthCap);
  m.def("stationary_pi", &cdtising::stationary_pi, py::arg("n"), py::arg("g"));
  m.def("run_chain", [](double g, std::uint64_t steps, std::uint64_t burn_in, std::uint64_t seed,
                        int n_cap) {
    cdtising::ChainConfig cfg{g, steps, burn_in, seed, n_cap};
    const auto s = cdtising::run_chain(cfg);
    py::dict d;
    d["visits"] = s.visits;
    d["recorded"] = s.recorded;
    d["tail_events"] = s.tail_events;
    d["mean_width"] = s.mean_width;
    d["tv_distance"] = s.tv_distance;
    d["max_width"] = s.max_width;
    return d;
  }, py::arg("g"), py::arg("steps"), py::arg("burn_in") = 0, py::arg("seed") = 0,
     py::arg("n_cap") = cdtising::kDefaultWidthCap);
}
