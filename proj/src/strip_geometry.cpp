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

#include "cdtising/strip_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cdtising/errors.hpp"

namespace cdtising {

StripTriangulation::StripTriangulation(std::vector<Kind> kinds) : kinds_(std::move(kinds)) {
  if (kinds_.empty() || kinds_.front() != Kind::Up) {
    throw DomainError("strip must start with its root up-triangle");
  }
  up_count_ = static_cast<int>(std::count(kinds_.begin(), kinds_.end(), Kind::Up));
  if (up_count_ == static_cast<int>(kinds_.size())) {
    throw DomainError("strip needs at least one down-triangle");
  }
}

std::string StripTriangulation::to_string() const {
  std::string out;
  out.reserve(kinds_.size());
  for (Kind k : kinds_) out.push_back(k == Kind::Up ? 'U' : 'D');
  return out;
}

StripTriangulation StripTriangulation::parse(const std::string& text) {
  std::vector<Kind> kinds;
  kinds.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u') {
      kinds.push_back(Kind::Up);
    } else if (c == 'D' || c == 'd') {
      kinds.push_back(Kind::Down);
    } else {
      throw DomainError(std::string("unexpected strip symbol '") + c + "'");
    }
  }
  return StripTriangulation(std::move(kinds));
}

SpinConfiguration::SpinConfiguration(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("spins must be +1 or -1");
  }
}

SpinConfiguration SpinConfiguration::flipped() const {
  std::vector<int> out(signs_.size());
  std::transform(signs_.begin(), signs_.end(), out.begin(), [](int s) { return -s; });
  return SpinConfiguration(std::move(out));
}

BigInt count_strips(long n_up, long n_down) {
  if (n_up < 1) throw DomainError("count_strips: n_up must be >= 1, got " + std::to_string(n_up));
  if (n_down < 1) {
    throw DomainError("count_strips: n_down must be >= 1, got " + std::to_string(n_down));
  }
  // binomial(n_up + n_down - 1, n_down) by the multiplicative formula; every
  // partial product is itself a binomial, so each division is exact.
  BigInt result = 1;
  const long top = n_up + n_down - 1;
  for (long i = 1; i <= n_down; ++i) {
    result *= (top - n_down + i);
    result /= i;
  }
  return result;
}

namespace {

void extend(std::vector<Kind>& prefix, int ups_left, int downs_left,
            std::vector<StripTriangulation>& out) {
  if (ups_left == 0 && downs_left == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (ups_left > 0) {
    prefix.push_back(Kind::Up);
    extend(prefix, ups_left - 1, downs_left, out);
    prefix.pop_back();
  }
  if (downs_left > 0) {
    prefix.push_back(Kind::Down);
    extend(prefix, ups_left, downs_left - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StripTriangulation> enumerate_strips(int n_up, int n_down, int cap) {
  if (n_up < 1) throw DomainError("enumerate_strips: n_up must be >= 1");
  if (n_down < 1) throw DomainError("enumerate_strips: n_down must be >= 1");
  if (n_up + n_down > cap) {
    throw ResourceError("enumerate_strips: n_up + n_down = " + std::to_string(n_up + n_down) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
  std::vector<StripTriangulation> out;
  out.reserve(static_cast<std::size_t>(count_strips(n_up, n_down)));
  std::vector<Kind> prefix{Kind::Up};
  extend(prefix, n_up - 1, n_down, out);
  return out;
}

double strip_energy(const StripTriangulation& t, const SpinConfiguration& sigma) {
  if (t.size() != sigma.size()) {
    throw ConsistencyError("strip_energy: strip has " + std::to_string(t.size()) +
                           " triangles but " + std::to_string(sigma.size()) + " spins");
  }
  const std::size_t s = t.size();
  int sum = 0;
  for (std::size_t l = 0; l < s; ++l) sum += sigma[l] * sigma[(l + 1) % s];
  return -static_cast<double>(sum);
}

namespace {

std::vector<int> spins_of_kind(const StripTriangulation& t, const SpinConfiguration& sigma,
                               Kind kind) {
  if (t.size() != sigma.size()) {
    throw ConsistencyError("strip and spin configuration lengths differ");
  }
  std::vector<int> out;
  for (std::size_t l = 0; l < t.size(); ++l) {
    if (t[l] == kind) out.push_back(sigma[l]);
  }
  return out;
}

}  // namespace

std::vector<int> down_spins(const StripTriangulation& t, const SpinConfiguration& sigma) {
  return spins_of_kind(t, sigma, Kind::Down);
}

std::vector<int> up_spins(const StripTriangulation& t, const SpinConfiguration& sigma) {
  return spins_of_kind(t, sigma, Kind::Up);
}

double interaction_energy(std::span<const int> lower_down, std::span<const int> upper_up) {
  if (lower_down.size() != upper_up.size()) {
    throw ConsistencyError("interaction_energy: lower strip has " +
                           std::to_string(lower_down.size()) + " down-triangles, upper strip has " +
                           std::to_string(upper_up.size()) + " up-triangles");
  }
  int sum = 0;
  for (std::size_t k = 0; k < lower_down.size(); ++k) sum += lower_down[k] * upper_up[k];
  return -static_cast<double>(sum);
}

double interaction_energy(const StripTriangulation& lower, const SpinConfiguration& lower_spins,
                          const StripTriangulation& upper, const SpinConfiguration& upper_spins) {
  const auto d = down_spins(lower, lower_spins);
  const auto u = up_spins(upper, upper_spins);
  return interaction_energy(d, u);
}

}  // namespace cdtising
