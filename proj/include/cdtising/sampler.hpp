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

#ifndef CDTISING_SAMPLER_HPP
#define CDTISING_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cdtising {

inline constexpr int kDefaultWidthCap = 10'000;
/// Largest tail mass a tabulated row may leave out.
inline constexpr double kMaxRowTail = 1e-9;

struct ChainConfig {
  double g = 0.25;
  std::uint64_t steps = 1'000'000;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 0;
  int n_cap = kDefaultWidthCap;

  /// Throws DomainError unless g in (0, 1/2), steps > burn_in, n_cap >= 1.
  void validate() const;
};

/// P(n, n') for n' = 1..n_cap, plus the mass beyond n_cap.
///
/// P(n, n') = u(n, n') phi(n') / (Lambda phi(n)) with phi(n) = n r^n and
/// r = sqrt(Lambda); equivalently n' - 1 is negative binomial with n + 1
/// successes and failure probability g r.
struct TransitionRow {
  int n = 1;
  std::vector<double> probs;
  double tail = 0.0;
};

/// Throws DomainError for g outside (0, 1/2) or n < 1, ResourceError when
/// the tail exceeds kMaxRowTail.
TransitionRow transition_row(int n, double g, int n_cap = kDefaultWidthCap);

/// pi(n) = n Lambda^n (1 - Lambda)^2 / Lambda.
double stationary_pi(int n, double g);

/// sum_{n > k} pi(n).
double stationary_tail(int k, double g);

/// sum_n n pi(n) = (1 + Lambda) / (1 - Lambda).
double stationary_mean_width(double g);

/// ||pi P - pi||_1 over widths 1..k of the kernel truncated to 1..k, plus
/// the stationary mass beyond k (which bounds the omitted contributions).
double stationarity_residual(double g, int k);

struct ChainSummary {
  ChainConfig config;
  /// visits[n] counts recorded visits to width n (index 0 unused).
  std::vector<std::uint64_t> visits;
  std::map<std::pair<int, int>, std::uint64_t> transitions;
  std::uint64_t recorded = 0;
  std::uint64_t tail_events = 0;
  double mean_width = 0.0;
  double tv_distance = 0.0;
  int max_width = 0;
};

/// Runs the chain from width 1. The first burn_in states are discarded;
/// visits and transitions cover the remaining steps - burn_in states.
ChainSummary run_chain(const ChainConfig& cfg);

/// 0.5 sum_n |visits(n)/recorded - pi(n)|, with pi beyond the visited
/// range added in full.
double tv_to_stationary(const std::vector<std::uint64_t>& visits, std::uint64_t recorded,
                        double g);

}  // namespace cdtising

#endif  // CDTISING_SAMPLER_HPP
