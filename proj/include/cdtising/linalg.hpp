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

#ifndef CDTISING_LINALG_HPP
#define CDTISING_LINALG_HPP

#include <Eigen/Dense>

namespace cdtising {

struct PowerIterationOptions {
  double relative_tolerance = 1e-13;
  long max_iterations = 100000;
  /// Estimate the second eigenvalue modulus by deflation.
  bool estimate_gap = true;
};

/// Principal eigenpair of a nonnegative matrix, as produced by power
/// iteration from the all-ones vector.
struct SpectralReport {
  double principal_eigenvalue = 0.0;
  /// ||A v - lambda v|| / ||v||
  double residual = 0.0;
  /// principal_eigenvalue - |second eigenvalue| (0 when not estimated).
  double gap = 0.0;
  double second_modulus = 0.0;
  /// Right eigenvector, unit 2-norm, sign fixed so the sum is positive.
  Eigen::VectorXd eigenvector;
  /// Left eigenvector (eigenvector of the transpose), same normalisation.
  Eigen::VectorXd left_eigenvector;
  long iterations = 0;
};

/// Throws NumericError if the relative change never drops below tolerance.
SpectralReport power_iteration(const Eigen::MatrixXd& a, const PowerIterationOptions& opts = {});

/// A^n by repeated squaring; n >= 1.
Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& a, int n);

}  // namespace cdtising

#endif  // CDTISING_LINALG_HPP
