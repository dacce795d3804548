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

#include "cdtising/linalg.hpp"

#include <cmath>
#include <string>

#include "cdtising/errors.hpp"

namespace cdtising {

namespace {

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
  long iterations = 0;
};

void fix_sign(Eigen::VectorXd& v) {
  if (v.sum() < 0.0) v = -v;
}

template <typename Apply>
Eigenpair iterate(Apply apply, Eigen::Index dim, const PowerIterationOptions& opts) {
  Eigen::VectorXd v = Eigen::VectorXd::Ones(dim).normalized();
  Eigen::VectorXd w(dim);
  double value = 0.0;
  for (long it = 1; it <= opts.max_iterations; ++it) {
    apply(v, w);
    const double norm = w.norm();
    if (norm == 0.0) return {0.0, v, it};
    w /= norm;
    const double value_change = std::abs(norm - value) / norm;
    const double vector_change = (w - v).lpNorm<Eigen::Infinity>();
    value = norm;
    v.swap(w);
    if (value_change <= opts.relative_tolerance && vector_change <= opts.relative_tolerance) {
      fix_sign(v);
      return {value, v, it};
    }
  }
  throw NumericError("power iteration did not reach relative change " +
                     std::to_string(opts.relative_tolerance) + " within " +
                     std::to_string(opts.max_iterations) + " iterations (last estimate " +
                     std::to_string(value) + ")");
}

// Modulus of the dominant eigenvalue of A - lambda v u^T / (u.v), from the
// mean logarithmic growth rate over the second half of a fixed run.
double deflated_modulus(const Eigen::MatrixXd& a, double lambda, const Eigen::VectorXd& right,
                        const Eigen::VectorXd& left) {
  const Eigen::Index n = a.rows();
  const double overlap = left.dot(right);
  if (n < 2 || overlap == 0.0) return 0.0;
  constexpr int kIterations = 600;
  constexpr int kBurn = 300;
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1.0 : -1.0) + 1.0 / (1.0 + i);
  x.normalize();
  Eigen::VectorXd y(n);
  double log_growth = 0.0;
  for (int it = 0; it < kIterations; ++it) {
    y.noalias() = a * x;
    y -= (lambda * left.dot(x) / overlap) * right;
    const double norm = y.norm();
    if (!(norm > 1e-300 * std::max(1.0, lambda))) return 0.0;
    if (it >= kBurn) log_growth += std::log(norm);
    x = y / norm;
  }
  return std::exp(log_growth / (kIterations - kBurn));
}

}  // namespace

SpectralReport power_iteration(const Eigen::MatrixXd& a, const PowerIterationOptions& opts) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ConsistencyError("power_iteration needs a nonempty square matrix");
  }
  const auto right = iterate([&](const Eigen::VectorXd& v, Eigen::VectorXd& w) { w.noalias() = a * v; },
                             a.rows(), opts);
  const auto left = iterate(
      [&](const Eigen::VectorXd& v, Eigen::VectorXd& w) { w.noalias() = a.transpose() * v; },
      a.rows(), opts);

  // Two-sided Rayleigh quotient: second order in the eigenvector errors.
  const double overlap = left.vector.dot(right.vector);
  const double value =
      overlap > 0.0 ? left.vector.dot(a * right.vector) / overlap : right.value;

  SpectralReport report;
  report.principal_eigenvalue = value;
  report.eigenvector = right.vector;
  report.left_eigenvector = left.vector;
  report.iterations = right.iterations;
  report.residual = (a * right.vector - value * right.vector).norm() / right.vector.norm();
  if (opts.estimate_gap) {
    report.second_modulus = deflated_modulus(a, value, right.vector, left.vector);
    report.gap = std::max(0.0, value - report.second_modulus);
  }
  return report;
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& a, int n) {
  if (n < 1) throw DomainError("matrix_power: exponent must be >= 1");
  if (a.rows() != a.cols()) throw ConsistencyError("matrix_power needs a square matrix");
  Eigen::MatrixXd base = a;
  Eigen::MatrixXd result;
  bool have_result = false;
  Eigen::MatrixXd scratch(a.rows(), a.cols());
  while (true) {
    if (n & 1) {
      if (have_result) {
        scratch.noalias() = result * base;
        result.swap(scratch);
      } else {
        result = base;
        have_result = true;
      }
    }
    n >>= 1;
    if (n == 0) break;
    scratch.noalias() = base * base;
    base.swap(scratch);
  }
  return result;
}

}  // namespace cdtising
