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

#ifndef CDTISING_PURE_SPECTRUM_HPP
#define CDTISING_PURE_SPECTRUM_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cdtising/linalg.hpp"
#include "cdtising/params.hpp"

namespace cdtising {

inline constexpr int kMaxPureTruncation = 4096;

/// Finite section of the pure transfer matrix U. Row/column k stands for a
/// boundary of n = k + 1 edges.
struct TruncatedOperator {
  Eigen::MatrixXd entries;

  int dim() const noexcept { return static_cast<int>(entries.rows()); }
  static constexpr int boundary_size(int index) noexcept { return index + 1; }
  static constexpr int index_of(int boundary) noexcept { return boundary - 1; }
};

/// u(n, n') = binomial(n + n' - 1, n - 1) g^(n + n'). The binomial is exact
/// (big integer) while it fits a double; beyond that log-gamma is used.
double u_entry(int n, int n_prime, const Params& p);

/// Lambda(g) = [(1 - sqrt(1 - 4 g^2)) / (2 g)]^2. Throws DomainError for g > 1/2.
double lambda_pure(const Params& p);

/// sqrt(Lambda) = 2g / (1 + sqrt(1 - 4 g^2)), the geometric ratio of the
/// eigenvectors.
double lambda_root(const Params& p);

struct PureEigenvectors {
  Eigen::VectorXd right;  // phi(n)  = n r^n,  r = sqrt(Lambda)
  Eigen::VectorXd left;   // phi*(n) = r^n
};

/// Entries n = 1..n_max. Requires g < 1/2.
PureEigenvectors eigenvectors_pure(const Params& p, int n_max);

/// sum_{n' >= 1} u(n, n') = (g / (1 - g))^n (1 - (1 - g)^n).
double row_sum_closed(int n, const Params& p);

/// sum_{n' > n_max} u(n, n'), via the regularised incomplete beta function
/// (the omitted mass of a negative-binomial row).
double row_sum_tail(int n, const Params& p, int n_max);

/// Dense U restricted to 1 <= n, n' <= n_max, 2 <= n_max <= 4096.
TruncatedOperator build_truncated_U(const Params& p, int n_max);

/// U restricted to strips of at most s_max triangles: u(n, n') is kept when
/// n + n' <= s_max and zeroed otherwise; dimension s_max - 1.
TruncatedOperator build_size_truncated_U(const Params& p, int s_max);

/// tr(U_trunc^N) for the n_max section (n_max >= 1).
double z_n_truncated(int N, const Params& p, int n_max);

/// tr(U^N) over strips of at most s_max triangles; matches the state
/// truncation used for the coupled operator.
double z_n_size_truncated(int N, const Params& p, int s_max);

/// (1/N) log tr(U_trunc^N) for each N. Requires g < 1/2.
std::vector<double> free_energy_pure(std::span<const int> n_list, const Params& p, int n_max);

/// n_max from the rule 50 (1 + 1/(1 - 2g)), rounded up.
int residual_truncation_rule(const Params& p);

struct PureResiduals {
  double right = 0.0;  // ||U phi - Lambda phi|| / ||phi||
  double left = 0.0;   // ||U^T phi* - Lambda phi*|| / ||phi*||
};

PureResiduals eigen_residuals(const Params& p, int n_max);

/// sum u(n, n')^2 over the n_max section (Hilbert-Schmidt finiteness check).
double hilbert_schmidt_sum(const Params& p, int n_max);

/// Power iteration on the n_max section.
SpectralReport truncated_spectrum(const Params& p, int n_max);

}  // namespace cdtising

#endif  // CDTISING_PURE_SPECTRUM_HPP
