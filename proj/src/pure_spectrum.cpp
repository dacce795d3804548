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

#include "cdtising/pure_spectrum.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "cdtising/errors.hpp"
#include "cdtising/strip_geometry.hpp"

namespace cdtising {

namespace {

// binomial(1020, 510) ~ 1e306 is the largest central binomial below DBL_MAX.
constexpr int kExactBinomialTop = 1020;

void require_subcritical(const Params& p, const char* what) {
  if (!(p.g() < 0.5)) {
    throw DomainError(std::string(what) + " requires g < 1/2, got g = " + std::to_string(p.g()));
  }
}

// Dense section with u(n, n') filled by the Pascal recurrence
// u(n, n') = g (u(n-1, n') + u(n, n'-1)), u(0, n') = 0, u(n, 0) = g^n.
// All terms are positive, so the recurrence is forward stable.
Eigen::MatrixXd pascal_section(double g, int n_max) {
  Eigen::MatrixXd u(n_max, n_max);
  Eigen::VectorXd prev_row = Eigen::VectorXd::Zero(n_max);  // u(n-1, .)
  double g_pow = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    g_pow *= g;
    double left = g_pow;  // u(n, 0)
    for (int np = 1; np <= n_max; ++np) {
      const double value = g * (prev_row[np - 1] + left);
      u(n - 1, np - 1) = value;
      left = value;
    }
    prev_row = u.row(n - 1).transpose();
  }
  return u;
}

}  // namespace

double u_entry(int n, int n_prime, const Params& p) {
  if (n < 1 || n_prime < 1) throw DomainError("u_entry: boundary sizes must be >= 1");
  const int top = n + n_prime - 1;
  const double log_weight = (n + n_prime) * std::log(p.g());
  double log_binom = 0.0;
  if (top <= kExactBinomialTop) {
    const double binom = count_strips(n, n_prime).convert_to<double>();
    // Keep the product in range when g^(n + n') alone would underflow.
    if (log_weight > -700.0) return binom * std::pow(p.g(), n + n_prime);
    log_binom = std::log(binom);
  } else {
    log_binom = std::lgamma(top + 1.0) - std::lgamma(static_cast<double>(n)) -
                std::lgamma(n_prime + 1.0);
  }
  return std::exp(log_binom + log_weight);
}

double lambda_pure(const Params& p) {
  const double g = p.g();
  if (g > 0.5) {
    throw DomainError("lambda_pure requires g <= 1/2 (1 - 4 g^2 < 0), got g = " +
                      std::to_string(g));
  }
  const double root = lambda_root(p);
  return root * root;
}

double lambda_root(const Params& p) {
  const double g = p.g();
  if (g > 0.5) {
    throw DomainError("lambda_root requires g <= 1/2, got g = " + std::to_string(g));
  }
  // (1 - sqrt(1 - 4g^2)) / (2g) rewritten without the cancellation at small g.
  return 2.0 * g / (1.0 + std::sqrt(1.0 - 4.0 * g * g));
}

PureEigenvectors eigenvectors_pure(const Params& p, int n_max) {
  require_subcritical(p, "eigenvectors_pure");
  if (n_max < 1) throw DomainError("eigenvectors_pure: n_max must be >= 1");
  const double root = lambda_root(p);
  PureEigenvectors out{Eigen::VectorXd(n_max), Eigen::VectorXd(n_max)};
  double power = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    power *= root;
    out.right[n - 1] = n * power;
    out.left[n - 1] = power;
  }
  return out;
}

double row_sum_closed(int n, const Params& p) {
  if (n < 1) throw DomainError("row_sum_closed: n must be >= 1");
  const double g = p.g();
  return std::pow(g / (1.0 - g), n) * -std::expm1(n * std::log1p(-g));
}

double row_sum_tail(int n, const Params& p, int n_max) {
  if (n < 1 || n_max < 0) throw DomainError("row_sum_tail: need n >= 1 and n_max >= 0");
  const double g = p.g();
  return std::pow(g / (1.0 - g), n) * boost::math::ibeta(n_max + 1.0, static_cast<double>(n), g);
}

TruncatedOperator build_truncated_U(const Params& p, int n_max) {
  if (n_max < 2) throw DomainError("build_truncated_U: n_max must be >= 2");
  if (n_max > kMaxPureTruncation) {
    throw ResourceError("build_truncated_U: n_max = " + std::to_string(n_max) +
                        " exceeds the cap of " + std::to_string(kMaxPureTruncation));
  }
  return {pascal_section(p.g(), n_max)};
}

TruncatedOperator build_size_truncated_U(const Params& p, int s_max) {
  if (s_max < 2) throw DomainError("build_size_truncated_U: s_max must be >= 2");
  if (s_max - 1 > kMaxPureTruncation) {
    throw ResourceError("build_size_truncated_U: s_max exceeds the cap");
  }
  Eigen::MatrixXd u = pascal_section(p.g(), s_max - 1);
  for (int n = 1; n < s_max; ++n) {
    for (int np = 1; np < s_max; ++np) {
      if (n + np > s_max) u(n - 1, np - 1) = 0.0;
    }
  }
  return {std::move(u)};
}

double z_n_truncated(int N, const Params& p, int n_max) {
  if (N < 1) throw DomainError("z_n_truncated: N must be >= 1");
  if (n_max < 1) throw DomainError("z_n_truncated: n_max must be >= 1");
  if (n_max > kMaxPureTruncation) throw ResourceError("z_n_truncated: n_max exceeds the cap");
  return matrix_power(pascal_section(p.g(), n_max), N).trace();
}

double z_n_size_truncated(int N, const Params& p, int s_max) {
  if (N < 1) throw DomainError("z_n_size_truncated: N must be >= 1");
  return matrix_power(build_size_truncated_U(p, s_max).entries, N).trace();
}

std::vector<double> free_energy_pure(std::span<const int> n_list, const Params& p, int n_max) {
  require_subcritical(p, "free_energy_pure");
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int N : n_list) {
    const double trace = z_n_truncated(N, p, n_max);
    if (!(trace > 0.0)) {
      throw NumericError("free_energy_pure: nonpositive trace of a positive matrix power (N = " +
                         std::to_string(N) + ")");
    }
    out.push_back(std::log(trace) / N);
  }
  return out;
}

int residual_truncation_rule(const Params& p) {
  require_subcritical(p, "residual_truncation_rule");
  return static_cast<int>(std::ceil(50.0 * (1.0 + 1.0 / (1.0 - 2.0 * p.g()))));
}

PureResiduals eigen_residuals(const Params& p, int n_max) {
  const auto u = build_truncated_U(p, n_max);
  const auto vecs = eigenvectors_pure(p, n_max);
  const double lambda = lambda_pure(p);
  PureResiduals out;
  out.right = (u.entries * vecs.right - lambda * vecs.right).norm() / vecs.right.norm();
  out.left =
      (u.entries.transpose() * vecs.left - lambda * vecs.left).norm() / vecs.left.norm();
  return out;
}

double hilbert_schmidt_sum(const Params& p, int n_max) {
  return build_truncated_U(p, n_max).entries.squaredNorm();
}

SpectralReport truncated_spectrum(const Params& p, int n_max) {
  return power_iteration(build_truncated_U(p, n_max).entries);
}

}  // namespace cdtising
