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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "cdtising/errors.hpp"
#include "cdtising/strip_geometry.hpp"
#include "oracles.hpp"

using namespace cdtising;

namespace {

StripTriangulation strip(const char* text) { return StripTriangulation::parse(text); }
SpinConfiguration spins(std::vector<int> s) { return SpinConfiguration(std::move(s)); }

BigInt pascal_binomial(int n, int k) {
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace

TEST_CASE("count_strips small values") {
  CHECK(count_strips(1, 1) == 1);
  CHECK(count_strips(2, 2) == 3);
  CHECK(count_strips(3, 2) == 6);
  CHECK(count_strips(2, 1) == 2);
}

TEST_CASE("count_strips is exact for large arguments") {
  for (int a : {20, 33, 64}) {
    for (int b : {1, 17, 64}) CHECK(count_strips(a, b) == pascal_binomial(a + b - 1, a - 1));
  }
  CHECK(count_strips(64, 64) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("count_strips names the bad argument") {
  CHECK_THROWS_WITH_AS(count_strips(0, 3), doctest::Contains("n_up"), DomainError);
  CHECK_THROWS_WITH_AS(count_strips(2, -1), doctest::Contains("n_down"), DomainError);
}

TEST_CASE("enumerate_strips listings") {
  auto one = enumerate_strips(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "UD");

  auto two = enumerate_strips(2, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].to_string() == "UUD");
  CHECK(two[1].to_string() == "UDU");

  auto four = enumerate_strips(2, 2);
  CHECK(four.size() == 3);
  for (const auto& t : four) CHECK(t[0] == Kind::Up);
}

TEST_CASE("enumerate_strips enforces its cap") {
  CHECK_THROWS_AS(enumerate_strips(9, 9), ResourceError);
  CHECK_THROWS_WITH(enumerate_strips(5, 5, 8), doctest::Contains("8"));
  CHECK(enumerate_strips(5, 5, 10).size() == 126);
}

TEST_CASE("count and enumeration agree with the bitmask oracle") {
  for (int up = 1; up <= 8; ++up) {
    for (int down = 1; down <= 8; ++down) {
      const auto listed = enumerate_strips(up, down);
      CHECK(BigInt(listed.size()) == count_strips(up, down));
      std::set<std::string> mine;
      for (const auto& t : listed) {
        mine.insert(t.to_string());
        CHECK(t.up_count() == up);
        CHECK(t.down_count() == down);
        CHECK(t.size() == static_cast<std::size_t>(up + down));
      }
      CHECK(mine.size() == listed.size());
      const auto ref = oracle::strips_by_mask(up, down);
      CHECK(mine == std::set<std::string>(ref.begin(), ref.end()));
      CHECK(std::is_sorted(listed.begin(), listed.end()));
    }
  }
}

TEST_CASE("strip invariants are enforced") {
  CHECK_THROWS_AS(strip("DU"), DomainError);
  CHECK_THROWS_AS(strip("UUU"), DomainError);
  CHECK_THROWS_AS(strip("UXD"), DomainError);
  CHECK_THROWS_AS(spins({1, 0}), DomainError);
  CHECK(strip("UDDU").to_string() == "UDDU");
}

TEST_CASE("strip_energy examples") {
  CHECK(strip_energy(strip("UDUD"), spins({1, 1, 1, 1})) == -4.0);
  CHECK(strip_energy(strip("UD"), spins({1, -1})) == 2.0);
  CHECK(strip_energy(strip("UD"), spins({1, 1})) == -2.0);
  CHECK(strip_energy(strip("UDU"), spins({1, -1, 1})) == 1.0);
  CHECK_THROWS_AS(strip_energy(strip("UDU"), spins({1, 1})), ConsistencyError);
}

TEST_CASE("interaction_energy examples") {
  const std::vector<int> plus3{1, 1, 1};
  CHECK(interaction_energy(plus3, plus3) == -3.0);
  const std::vector<int> a{1}, b{-1};
  CHECK(interaction_energy(a, b) == 1.0);
  const std::vector<int> lo{1, -1}, hi{1, 1};
  CHECK(interaction_energy(lo, hi) == 0.0);
  const std::vector<int> two{1, 1};
  CHECK_THROWS_AS(interaction_energy(plus3, two), ConsistencyError);
}

TEST_CASE("interaction pairs the k-th down with the k-th up") {
  // lower UDDU: downs at positions 1, 2; upper UUD: ups at positions 0, 1.
  const auto lower = strip("UDDU");
  const auto upper = strip("UUD");
  const auto ls = spins({1, 1, -1, 1});
  const auto us = spins({1, -1, 1});
  CHECK(down_spins(lower, ls) == std::vector<int>{1, -1});
  CHECK(up_spins(upper, us) == std::vector<int>{1, -1});
  CHECK(interaction_energy(lower, ls, upper, us) == -2.0);
  CHECK_THROWS_AS(interaction_energy(lower, ls, strip("UD"), spins({1, 1})), ConsistencyError);
}

TEST_CASE("property: all-plus cylinders sit at -3/2 per triangle") {
  std::vector<StripTriangulation> pool;
  for (int s = 2; s <= 4; ++s) {
    for (int down = 1; down < s; ++down) {
      for (auto& t : enumerate_strips(s - down, down)) pool.push_back(t);
    }
  }
  long checked = 0;
  for (int N = 1; N <= 3; ++N) {
    std::vector<std::size_t> idx(N, 0);
    for (;;) {
      bool consistent = true;
      for (int i = 0; i < N; ++i) {
        if (pool[idx[i]].down_count() != pool[idx[(i + 1) % N]].up_count()) consistent = false;
      }
      if (consistent) {
        double energy = 0.0;
        int total = 0;
        for (int i = 0; i < N; ++i) {
          const auto& t = pool[idx[i]];
          const auto& u = pool[idx[(i + 1) % N]];
          const SpinConfiguration st(std::vector<int>(t.size(), 1));
          const SpinConfiguration su(std::vector<int>(u.size(), 1));
          energy += strip_energy(t, st) + interaction_energy(t, st, u, su);
          total += static_cast<int>(t.size());
          CHECK(static_cast<int>(t.size()) == t.up_count() + t.down_count());
        }
        CHECK(energy == -1.5 * total);
        ++checked;
      }
      int pos = 0;
      while (pos < N && ++idx[pos] == pool.size()) idx[pos++] = 0;
      if (pos == N) break;
    }
  }
  CHECK(checked == 85);
}

TEST_CASE("property: energies are flip invariant and bounded") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 9);
    std::vector<Kind> kinds(s, Kind::Up);
    for (int i = 1; i < s; ++i) kinds[i] = (rng() & 1) ? Kind::Down : Kind::Up;
    if (std::count(kinds.begin(), kinds.end(), Kind::Down) == 0) kinds[s - 1] = Kind::Down;
    const StripTriangulation t(kinds);
    std::vector<int> sg(s);
    for (auto& x : sg) x = (rng() & 1) ? 1 : -1;
    const SpinConfiguration sigma(sg);
    const double h = strip_energy(t, sigma);
    CHECK(h == strip_energy(t, sigma.flipped()));
    CHECK(h >= -s);
    CHECK(h <= s);
    CHECK(h == oracle::ring_energy(sg));
    const auto d = down_spins(t, sigma);
    const auto fd = down_spins(t, sigma.flipped());
    CHECK(interaction_energy(d, d) == interaction_energy(fd, fd));
    CHECK(interaction_energy(d, d) == -static_cast<double>(d.size()));
  }
}
