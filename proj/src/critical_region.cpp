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

#include "cdtising/critical_region.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cdtising/errors.hpp"
#include "cdtising/ising_strip.hpp"

namespace cdtising {

namespace {

// rho(Q) - 1, with the T-region boundary mapped to +infinity.
double excess(double beta, double mu) {
  const auto cond = lambda_condition(Params::from_couplings(beta, mu));
  return cond.value - 1.0;
}

}  // namespace

std::string_view curve_name(CurveId id) {
  switch (id) {
    case CurveId::LambdaQEq1: return "lambda_Q_eq_1";
    case CurveId::LambdaTEq1: return "lambda_T_eq_1";
    case CurveId::Beta0Bound: return "beta0_bound";
    case CurveId::GroundStateBound: return "ground_state_bound";
    case CurveId::SufficientBound: return "sufficient_bound";
  }
  return "unknown";
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::QConvergent: return "Q_convergent";
    case Region::TOnly: return "T_only";
    case Region::DivergentT: return "divergent_T";
  }
  return "unknown";
}

double solve_boundary_mu(double beta, double tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("solve_boundary_mu: beta must be finite and >= 0");
  }
  if (!(tol > 1e-14 && tol < 1e-4)) {
    throw DomainError("solve_boundary_mu: tol must lie in (1e-14, 1e-4), got " + std::to_string(tol));
  }
  const double floor = log_two_cosh(beta);
  double lo = floor + 1e-9 * std::max(1.0, floor);
  double hi = floor + kBracketWidth;
  const double f_lo = excess(beta, lo);
  const double f_hi = excess(beta, hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    throw BracketError("solve_boundary_mu: no sign change of rho(Q) - 1 on [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "] at beta = " + std::to_string(beta) +
                       " (values " + std::to_string(f_lo) + ", " + std::to_string(f_hi) + ")");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = excess(beta, mid);
    if (std::abs(f) <= tol) return mid;
    if (mid == lo || mid == hi) break;
    (f > 0.0 ? lo : hi) = mid;
  }
  throw NumericError("solve_boundary_mu: bracket collapsed before |rho(Q) - 1| <= " +
                     std::to_string(tol) + " at beta = " + std::to_string(beta));
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = 0.02 * i;
  return grid;
}

std::vector<CriticalCurve> bound_lines(std::span<const double> beta_grid, double tol) {
  if (beta_grid.empty()) throw DomainError("bound_lines: empty beta grid");
  for (std::size_t i = 0; i < beta_grid.size(); ++i) {
    if (!(beta_grid[i] >= 0.0)) throw DomainError("bound_lines: beta must be >= 0");
    if (i > 0 && !(beta_grid[i] > beta_grid[i - 1])) {
      throw DomainError("bound_lines: beta grid must be strictly increasing");
    }
  }
  constexpr double ln2 = std::numbers::ln2;
  std::vector<CriticalCurve> curves{{CurveId::LambdaQEq1, {}},
                                    {CurveId::LambdaTEq1, {}},
                                    {CurveId::Beta0Bound, {}},
                                    {CurveId::GroundStateBound, {}},
                                    {CurveId::SufficientBound, {}}};
  for (auto& c : curves) c.points.reserve(beta_grid.size());
  for (double beta : beta_grid) {
    curves[0].points.push_back({beta, solve_boundary_mu(beta, tol)});
    curves[1].points.push_back({beta, log_two_cosh(beta)});
    curves[2].points.push_back({beta, 2.0 * ln2});
    curves[3].points.push_back({beta, ln2 + 1.5 * beta});
    curves[4].points.push_back({beta, 2.0 * ln2 + 1.5 * beta});
  }
  return curves;
}

std::optional<CurvePoint> curve_crossing(const CriticalCurve& a, const CriticalCurve& b) {
  if (a.points.size() != b.points.size()) {
    throw ConsistencyError("curve_crossing: curves sampled on different grids");
  }
  // Points where the curves agree to 1e-9 are touchings, not crossings; the
  // search runs over the remaining points only.
  constexpr double kTouch = 1e-9;
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const double d = a.points[i].mu - b.points[i].mu;
    if (std::abs(d) <= kTouch) continue;
    if (last) {
      const double d0 = a.points[*last].mu - b.points[*last].mu;
      if ((d0 < 0.0) != (d < 0.0)) {
        const double t = d0 / (d0 - d);
        const auto& p0 = a.points[*last];
        const auto& p1 = a.points[i];
        return CurvePoint{p0.beta + t * (p1.beta - p0.beta), p0.mu + t * (p1.mu - p0.mu)};
      }
    }
    last = i;
  }
  return std::nullopt;
}

Region region_classify(const Params& p) {
  if (!t_series_converges(p)) return Region::DivergentT;
  return lambda_condition(p).value < 1.0 ? Region::QConvergent : Region::TOnly;
}

}  // namespace cdtising
