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

#include "cdtising/ising_strip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "cdtising/errors.hpp"

namespace cdtising {

namespace {

constexpr std::array<int, 4> kFirstSpin{+1, +1, -1, -1};
constexpr std::array<int, 4> kSecondSpin{+1, -1, +1, -1};

int spin_index(int s) { return s > 0 ? 0 : 1; }

void require_t_region(const Params& p, const char* what) {
  if (!t_series_converges(p)) {
    throw DivergenceError(std::string(what) + ": sum of T^n diverges; need mu > ln(2 cosh beta) = " +
                          std::to_string(log_two_cosh(p.beta())) + ", got mu = " +
                          std::to_string(p.mu()));
  }
}

Mat4 pair_chain(const Mat2& first, const Mat2& second, double beta) {
  Mat4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double w =
          std::exp(beta * (kFirstSpin[i] * kSecondSpin[i] + kFirstSpin[j] * kSecondSpin[j]));
      out(i, j) = w * first(spin_index(kFirstSpin[i]), spin_index(kFirstSpin[j])) *
                  second(spin_index(kSecondSpin[i]), spin_index(kSecondSpin[j]));
    }
  }
  return out;
}

// Both branches of c^2 (m^2+1) h (1 -/+ sqrt(1 - (m^2-1)^2 / (h^2 (m^2+1)^2))).
std::pair<double, double> quadratic_branches(const CmParams& cm, double h) {
  const double m2 = cm.m * cm.m;
  const double ratio = (m2 - 1.0) / (h * (m2 + 1.0));
  const double root = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  const double scale = cm.c * cm.c * (m2 + 1.0) * h;
  return {scale * (1.0 - root), scale * (1.0 + root)};
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

double log_two_cosh(double beta) {
  const double a = std::abs(beta);
  return a + std::log1p(std::exp(-2.0 * a));
}

Mat2 matrix_T(const Params& p) {
  const double on = std::exp(p.beta() - p.mu());
  const double off = std::exp(-p.beta() - p.mu());
  Mat2 t;
  t << on, off, off, on;
  return t;
}

std::pair<double, double> t_eigenvalues(const Params& p) {
  const double a = std::exp(p.beta() - p.mu());
  const double b = std::exp(-(p.beta() + p.mu()));
  return {a + b, a - b};
}

bool t_series_converges(const Params& p) { return p.mu() > log_two_cosh(p.beta()); }

CmParams cm_params(const Params& p) {
  require_t_region(p, "cm_params");
  const double beta = p.beta();
  const double mu = p.mu();
  const double a = std::exp(beta - mu);
  const double denom = std::exp(2.0 * beta) * (1.0 - a) * (1.0 - a) - std::exp(-2.0 * mu);
  if (!(denom > 0.0)) {
    throw DivergenceError("cm_params: nonpositive denominator; need mu > ln(2 cosh beta)");
  }
  CmParams out;
  out.c = a / denom;
  out.m = std::exp(2.0 * beta) - std::expm1(4.0 * beta) * std::exp(-(beta + mu));
  return out;
}

Mat2 matrix_M(const Params& p, SeriesMode mode) {
  require_t_region(p, "matrix_M");
  if (mode == SeriesMode::ClosedForm) {
    const auto cm = cm_params(p);
    Mat2 m;
    m << cm.c * cm.m, cm.c, cm.c, cm.c * cm.m;
    return m;
  }
  const Mat2 t = matrix_T(p);
  Mat2 term = t;
  Mat2 sum = t;
  constexpr long kMaxTerms = 100'000'000;
  for (long k = 2; k <= kMaxTerms; ++k) {
    term = term * t;
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-14) return sum;
  }
  throw NumericError("matrix_M: series did not settle within " + std::to_string(kMaxTerms) +
                     " terms");
}

QFamily build_Q_family(const Params& p, QPattern pattern) {
  const Mat2 m = matrix_M(p, SeriesMode::ClosedForm);
  const Mat2 m2 = m * m;
  const Mat2 t = matrix_T(p);
  const double beta = p.beta();
  QFamily q{pair_chain(m, m, beta), pair_chain(m, m2, beta), pair_chain(t, m, beta),
            pair_chain(t, m2, beta)};
  if (pattern == QPattern::Alternate) {
    // Entry (3,4) of the alternate Q_m and Q_tm; the remaining alternate
    // differences (the (2,2) entries) coincide numerically since M and M^2
    // have equal diagonals.
    q.q_m(2, 3) = m(0, 0) * m2(0, 0);
    q.q_tm(2, 3) = t(0, 0) * m2(0, 0);
  }
  return q;
}

double spectral_radius(const Mat4& a) {
  Eigen::EigenSolver<Mat4> solver(a, false);
  if (solver.info() != Eigen::Success) throw NumericError("4x4 eigenvalue solver failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

QSpectrum q_spectrum(const Params& p, double match_tolerance) {
  const auto family = build_Q_family(p);
  Eigen::EigenSolver<Mat4> solver(family.q, false);
  if (solver.info() != Eigen::Success) throw NumericError("q_spectrum: eigenvalue solver failed");

  QSpectrum out;
  for (int i = 0; i < 4; ++i) out.eigenvalues[i] = solver.eigenvalues()[i];
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& x, const auto& y) { return std::abs(x) > std::abs(y); });
  for (int i = 0; i < 4; ++i) out.moduli[i] = std::abs(out.eigenvalues[i]);
  out.spectral_radius = out.moduli[0];

  const auto cm = cm_params(p);
  const double beta = p.beta();
  const double antisym = cm.c * cm.c * (cm.m * cm.m - 1.0);
  const auto [lo1, hi1] = quadratic_branches(cm, std::cosh(beta));
  const auto [lo2, hi2] = quadratic_branches(cm, std::cosh(2.0 * beta));
  out.cosh_beta_list = {antisym * std::exp(beta), antisym * std::exp(-beta), lo1, hi1};
  out.derived_list = {antisym * std::exp(2.0 * beta), antisym * std::exp(-2.0 * beta), lo2, hi2};
  out.closed_cosh_beta = hi1;
  out.closed_cosh_2beta = hi2;

  const bool two = close(out.spectral_radius, hi2, match_tolerance);
  const bool one = close(out.spectral_radius, hi1, match_tolerance);
  out.match = two && one ? ClosedFormMatch::Both
              : two      ? ClosedFormMatch::Cosh2Beta
              : one      ? ClosedFormMatch::CoshBeta
                         : ClosedFormMatch::Neither;
  return out;
}

LambdaCondition lambda_condition(const Params& p) {
  if (!t_series_converges(p)) {
    return {std::numeric_limits<double>::infinity(), ConditionStatus::OutsideTRegion};
  }
  return {spectral_radius(build_Q_family(p).q), ConditionStatus::Ok};
}

KKTTraceTerms trace_KKT_terms(const Params& p, QPattern pattern) {
  const auto q = build_Q_family(p, pattern);
  const double rho = spectral_radius(q.q);
  if (!(rho < 1.0)) {
    throw DivergenceError("trace of K K^T diverges: spectral radius of Q is " +
                          std::to_string(rho) + " >= 1 (convergence needs lambda(mu, beta) < 1)");
  }
  const Mat4 id = Mat4::Identity();
  const Eigen::PartialPivLU<Mat4> full_lu(id - q.q);
  const Eigen::PartialPivLU<Mat4> t_lu(id - q.q_t);
  KKTTraceTerms out;
  out.full = full_lu.solve(q.q_m).trace();
  out.t_from_zero = t_lu.solve(q.q_tm).trace();
  out.t_from_one = t_lu.solve(q.q_t * q.q_tm).trace();
  return out;
}

double trace_KKT_closed(const Params& p) {
  const auto terms = trace_KKT_terms(p);
  return terms.full - terms.t_from_zero;
}

}  // namespace cdtising
