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

#include "cdtising/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

#include <boost/math/special_functions/beta.hpp>

#include "cdtising/errors.hpp"
#include "cdtising/params.hpp"
#include "cdtising/pure_spectrum.hpp"

namespace cdtising {

namespace {

void require_fugacity(double g, const char* what) {
  if (!(g > 0.0 && g < 0.5)) {
    throw DomainError(std::string(what) + ": g must lie in (0, 1/2), got " + std::to_string(g));
  }
}

// g r, the failure probability of the negative-binomial row.
double row_ratio(double g) { return g * lambda_root(Params::from_fugacity(g)); }

std::vector<double> row_probs(int n, double x, int n_cap) {
  std::vector<double> probs(n_cap);
  double log_p = (n + 1.0) * std::log1p(-x);
  const double log_x = std::log(x);
  for (int k = 1; k <= n_cap; ++k) {
    probs[k - 1] = std::exp(log_p);
    log_p += std::log(static_cast<double>(n + k) / k) + log_x;
  }
  return probs;
}

double row_tail(int n, double x, int n_cap) {
  return boost::math::ibeta(static_cast<double>(n_cap), n + 1.0, x);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

class RowSampler {
 public:
  RowSampler(double g, int n_cap) : g_(g), x_(row_ratio(g)), n_cap_(n_cap) {}

  int draw(int n, double u, std::uint64_t& tail_events) {
    const auto& cdf = cdf_for(n);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it != cdf.end()) return static_cast<int>(it - cdf.begin()) + 1;
    ++tail_events;
    // Continue the inverse CDF past the table, one term at a time.
    double acc = cdf.empty() ? 0.0 : cdf.back();
    int k = static_cast<int>(cdf.size());
    double log_p = (n + 1.0) * std::log1p(-x_);
    for (int j = 1; j <= k; ++j) log_p += std::log(static_cast<double>(n + j) / j) + std::log(x_);
    for (;;) {
      ++k;
      const double p = std::exp(log_p);
      acc += p;
      if (acc > u || (p == 0.0 && k > n + 1)) return k;
      log_p += std::log(static_cast<double>(n + k) / k) + std::log(x_);
    }
  }

 private:
  const std::vector<double>& cdf_for(int n) {
    auto found = cache_.find(n);
    if (found != cache_.end()) return found->second;
    const auto row = transition_row(n, g_, n_cap_);
    std::vector<double> cdf;
    cdf.reserve(row.probs.size());
    double acc = 0.0;
    for (double p : row.probs) {
      acc += p;
      cdf.push_back(acc);
    }
    return cache_.emplace(n, std::move(cdf)).first->second;
  }

  double g_;
  double x_;
  int n_cap_;
  std::unordered_map<int, std::vector<double>> cache_;
};

}  // namespace

void ChainConfig::validate() const {
  require_fugacity(g, "ChainConfig");
  if (steps == 0) throw DomainError("ChainConfig: steps must be positive");
  if (burn_in >= steps) {
    throw DomainError("ChainConfig: burn_in (" + std::to_string(burn_in) +
                      ") must be smaller than steps (" + std::to_string(steps) + ")");
  }
  if (n_cap < 1) throw DomainError("ChainConfig: n_cap must be >= 1");
}

TransitionRow transition_row(int n, double g, int n_cap) {
  require_fugacity(g, "transition_row");
  if (n < 1) throw DomainError("transition_row: n must be >= 1");
  if (n_cap < 1) throw DomainError("transition_row: n_cap must be >= 1");
  const double x = row_ratio(g);
  TransitionRow row{n, row_probs(n, x, n_cap), row_tail(n, x, n_cap)};
  if (row.tail > kMaxRowTail) {
    throw ResourceError("transition_row: mass " + std::to_string(row.tail) + " beyond n_cap = " +
                        std::to_string(n_cap) + " at n = " + std::to_string(n) +
                        " exceeds 1e-9; increase n_cap");
  }
  return row;
}

double stationary_pi(int n, double g) {
  require_fugacity(g, "stationary_pi");
  if (n < 1) throw DomainError("stationary_pi: n must be >= 1");
  const double lambda = lambda_pure(Params::from_fugacity(g));
  const double one_minus = 1.0 - lambda;
  return n * std::pow(lambda, n - 1) * one_minus * one_minus;
}

double stationary_tail(int k, double g) {
  require_fugacity(g, "stationary_tail");
  if (k < 0) throw DomainError("stationary_tail: k must be >= 0");
  const double lambda = lambda_pure(Params::from_fugacity(g));
  return std::pow(lambda, k) * ((k + 1.0) - k * lambda);
}

double stationary_mean_width(double g) {
  require_fugacity(g, "stationary_mean_width");
  const double lambda = lambda_pure(Params::from_fugacity(g));
  return (1.0 + lambda) / (1.0 - lambda);
}

double stationarity_residual(double g, int k) {
  require_fugacity(g, "stationarity_residual");
  if (k < 1) throw DomainError("stationarity_residual: k must be >= 1");
  const double x = row_ratio(g);
  std::vector<double> pi(k);
  for (int n = 1; n <= k; ++n) pi[n - 1] = stationary_pi(n, g);
  std::vector<double> pushed(k, 0.0);
  for (int n = 1; n <= k; ++n) {
    const auto probs = row_probs(n, x, k);
    for (int j = 0; j < k; ++j) pushed[j] += pi[n - 1] * probs[j];
  }
  double l1 = 0.0;
  for (int j = 0; j < k; ++j) l1 += std::abs(pushed[j] - pi[j]);
  return l1 + stationary_tail(k, g);
}

double tv_to_stationary(const std::vector<std::uint64_t>& visits, std::uint64_t recorded,
                        double g) {
  if (recorded == 0) throw DomainError("tv_to_stationary: no recorded visits");
  const int top = visits.empty() ? 0 : static_cast<int>(visits.size()) - 1;
  double sum = 0.0;
  for (int n = 1; n <= top; ++n) {
    sum += std::abs(static_cast<double>(visits[n]) / static_cast<double>(recorded) -
                    stationary_pi(n, g));
  }
  return 0.5 * (sum + stationary_tail(top, g));
}

ChainSummary run_chain(const ChainConfig& cfg) {
  cfg.validate();
  ChainSummary out;
  out.config = cfg;
  out.visits.assign(2, 0);
  std::mt19937_64 rng(cfg.seed);
  RowSampler sampler(cfg.g, cfg.n_cap);

  int state = 1;
  double width_sum = 0.0;
  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    if (step >= cfg.burn_in) {
      if (state >= static_cast<int>(out.visits.size())) out.visits.resize(state + 1, 0);
      ++out.visits[state];
      ++out.recorded;
      width_sum += state;
      out.max_width = std::max(out.max_width, state);
    }
    if (step + 1 == cfg.steps) break;
    const int next = sampler.draw(state, uniform01(rng), out.tail_events);
    if (step >= cfg.burn_in) ++out.transitions[{state, next}];
    state = next;
  }
  out.mean_width = width_sum / static_cast<double>(out.recorded);
  out.tv_distance = tv_to_stationary(out.visits, out.recorded, cfg.g);
  return out;
}

}  // namespace cdtising
