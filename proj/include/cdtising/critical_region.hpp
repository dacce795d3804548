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

#ifndef CDTISING_CRITICAL_REGION_HPP
#define CDTISING_CRITICAL_REGION_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cdtising/params.hpp"

namespace cdtising {

enum class CurveId {
  LambdaQEq1,        // spectral radius of Q equals 1 (solved)
  LambdaTEq1,        // mu = ln(2 cosh beta)
  Beta0Bound,        // mu = 2 ln 2
  GroundStateBound,  // mu = ln 2 + 3 beta / 2
  SufficientBound,   // mu = 2 ln 2 + 3 beta / 2
};

std::string_view curve_name(CurveId id);

struct CurvePoint {
  double beta = 0.0;
  double mu = 0.0;
};

struct CriticalCurve {
  CurveId id = CurveId::LambdaQEq1;
  std::vector<CurvePoint> points;
};

inline constexpr double kDefaultBoundaryTolerance = 1e-12;
/// Width of the bisection bracket above ln(2 cosh beta).
inline constexpr double kBracketWidth = 40.0;

/// mu*(beta) with |rho(Q(beta, mu*)) - 1| <= tol, by bisection on
/// (ln(2 cosh beta), ln(2 cosh beta) + 40]. tol must lie in (1e-14, 1e-4).
double solve_boundary_mu(double beta, double tol = kDefaultBoundaryTolerance);

/// beta in [0, 2] with step 0.02: 101 points.
std::vector<double> default_beta_grid();

/// The five curves on a nonempty, strictly increasing grid of beta >= 0,
/// in CurveId order.
std::vector<CriticalCurve> bound_lines(std::span<const double> beta_grid,
                                       double tol = kDefaultBoundaryTolerance);

/// First sign change of a - b on a shared grid, linearly interpolated.
/// Points where the curves agree to 1e-9 count as touching and are skipped.
std::optional<CurvePoint> curve_crossing(const CriticalCurve& a, const CriticalCurve& b);

enum class Region { QConvergent, TOnly, DivergentT };

std::string_view region_name(Region r);

/// QConvergent iff rho(Q) < 1; TOnly iff lambda_+(T) < 1 <= rho(Q);
/// DivergentT otherwise.
Region region_classify(const Params& p);

}  // namespace cdtising

#endif  // CDTISING_CRITICAL_REGION_HPP
