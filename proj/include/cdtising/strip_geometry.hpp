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

#ifndef CDTISING_STRIP_GEOMETRY_HPP
#define CDTISING_STRIP_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdtising {

using BigInt = boost::multiprecision::cpp_int;

/// Up-triangles have their horizontal edge on the lower slice of the strip,
/// down-triangles on the upper slice. Up orders before Down.
enum class Kind : std::uint8_t { Up = 0, Down = 1 };

/// One strip of a causal triangulation, stored as its cyclic up/down
/// sequence read from the root triangle (index 0, always Up).
class StripTriangulation {
 public:
  /// Throws DomainError unless kinds[0] == Up and both kinds occur.
  explicit StripTriangulation(std::vector<Kind> kinds);

  std::size_t size() const noexcept { return kinds_.size(); }
  int up_count() const noexcept { return up_count_; }
  int down_count() const noexcept { return static_cast<int>(kinds_.size()) - up_count_; }
  const std::vector<Kind>& kinds() const noexcept { return kinds_; }
  Kind operator[](std::size_t i) const { return kinds_[i]; }

  /// "UUD", "UDUD", ...
  std::string to_string() const;
  static StripTriangulation parse(const std::string& text);

  friend bool operator==(const StripTriangulation&, const StripTriangulation&) = default;
  friend auto operator<=>(const StripTriangulation& a, const StripTriangulation& b) {
    return a.kinds_ <=> b.kinds_;
  }

 private:
  std::vector<Kind> kinds_;
  int up_count_ = 0;
};

/// Spins (+1/-1) on the triangles of a strip, aligned with its kinds().
class SpinConfiguration {
 public:
  /// Throws DomainError if any entry is not +1 or -1.
  explicit SpinConfiguration(std::vector<int> signs);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  SpinConfiguration flipped() const;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<int> signs_;
};

/// Number of rooted strips with n_up up- and n_down down-triangles:
/// binomial(n_up + n_down - 1, n_up - 1). Exact.
BigInt count_strips(long n_up, long n_down);

inline constexpr int kDefaultEnumerationCap = 16;

/// Every rooted strip with the given counts, lexicographic (Up < Down).
/// Throws ResourceError if n_up + n_down exceeds cap.
std::vector<StripTriangulation> enumerate_strips(int n_up, int n_down,
                                                 int cap = kDefaultEnumerationCap);

/// H(sigma) = -sum_l sigma_l sigma_{(l+1) mod s}. For s = 2 the two
/// triangles share two edges and the pair is counted twice.
double strip_energy(const StripTriangulation& t, const SpinConfiguration& sigma);

/// Spins on the down-triangles of t, in root-anchored order.
std::vector<int> down_spins(const StripTriangulation& t, const SpinConfiguration& sigma);
/// Spins on the up-triangles of t, in root-anchored order.
std::vector<int> up_spins(const StripTriangulation& t, const SpinConfiguration& sigma);

/// V = -sum_k lower[k] * upper[k]: the k-th down-triangle of the lower strip
/// shares its top edge with the k-th up-triangle of the upper strip.
/// Throws ConsistencyError on a count mismatch.
double interaction_energy(std::span<const int> lower_down, std::span<const int> upper_up);

/// Convenience overload working from whole strips.
double interaction_energy(const StripTriangulation& lower, const SpinConfiguration& lower_spins,
                          const StripTriangulation& upper, const SpinConfiguration& upper_spins);

}  // namespace cdtising

#endif  // CDTISING_STRIP_GEOMETRY_HPP
