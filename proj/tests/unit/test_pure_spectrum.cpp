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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "cdtising/errors.hpp"
#include "cdtising/params.hpp"
#include "cdtising/pure_spectrum.hpp"
#include "frozen_values.hpp"
#include "oracles.hpp"

using namespace cdtising;
using doctest::Approx;

namespace {

Params fug(double g) { return Params::from_fugacity(g); }

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("u_entry examples") {
  CHECK(u_entry(1, 1, fug(0.5)) == 0.25);
  for (double g : {0.1, 0.3, 0.45}) {
    CHECK(rel_close(u_entry(2, 3, fug(g)), 4 * std::pow(g, 5), 1e-15));
    for (int n2 = 1; n2 <= 12; ++n2) CHECK(rel_close(u_entry(1, n2, fug(g)), std::pow(g, 1 + n2), 1e-14));
  }
  CHECK_THROWS_AS(u_entry(0, 1, fug(0.2)), DomainError);
}

TEST_CASE("u_entry matches the Pascal oracle including the large-argument path") {
  for (int n : {1, 3, 40, 300, 700}) {
    for (int n2 : {1, 5, 64, 500, 800}) {
      const long double ref = oracle::binomial(n + n2 - 1, n - 1);
      const double g = 0.3;
      const double log_ref = static_cast<double>(std::log(ref)) + (n + n2) * std::log(g);
      const double got = u_entry(n, n2, fug(g));
      if (got > 0.0) {
        CHECK(std::abs(std::log(got) - log_ref) < 1e-10);
      } else {
        CHECK(log_ref < -700.0);
      }
    }
  }
}

TEST_CASE("lambda_pure values") {
  CHECK(lambda_pure(fug(0.5)) == 1.0);
  CHECK(lambda_pure(fug(0.25)) == Approx(frozen::kLambdaQuarter).epsilon(1e-14));
  CHECK(lambda_pure(fug(0.25)) == Approx(0.0717968).epsilon(1e-6));
  for (double g : {1e-3, 1e-5, 1e-8}) CHECK(lambda_pure(fug(g)) / (g * g) == Approx(1.0).epsilon(3 * g * g));
  CHECK_THROWS_AS(lambda_pure(fug(0.6)), DomainError);
}

TEST_CASE("eigenvectors are geometric in sqrt(Lambda)") {
  const auto v = eigenvectors_pure(fug(0.25), 10);
  CHECK(v.right[0] == Approx(frozen::kLambdaRootQuarter).epsilon(1e-14));
  CHECK(v.left[0] == Approx(frozen::kLambdaRootQuarter).epsilon(1e-14));
  CHECK(v.right[1] == Approx(frozen::kPhi2Quarter).epsilon(1e-14));
  for (int i = 0; i < 10; ++i) {
    CHECK(v.right[i] > 0.0);
    CHECK(v.left[i] > 0.0);
  }
  CHECK_THROWS_AS(eigenvectors_pure(fug(0.5), 10), DomainError);
}

TEST_CASE("eigen residuals vanish at the tail-rule truncation") {
  for (double g : {0.1, 0.2, 0.25, 0.3, 0.4, 0.45}) {
    const int n_max = residual_truncation_rule(fug(g));
    CHECK(n_max >= 50.0 * (1.0 + 1.0 / (1.0 - 2.0 * g)));
    const auto r = eigen_residuals(fug(g), n_max);
    CHECK(r.right <= 1e-8);
    CHECK(r.left <= 1e-8);
  }
}

TEST_CASE("truncated spectrum agrees with Lambda") {
  for (double g : {0.1, 0.25, 0.4}) {
    const int n_max = residual_truncation_rule(fug(g));
    const auto rep = truncated_spectrum(fug(g), n_max);
    CHECK(rep.principal_eigenvalue == Approx(lambda_pure(fug(g))).epsilon(1e-9));
    CHECK(rep.gap > 0.0);
  }
}

TEST_CASE("row_sum_closed examples") {
  CHECK(row_sum_closed(1, fug(0.25)) == Approx(frozen::kRowSum1Quarter).epsilon(1e-15));
  CHECK(row_sum_closed(2, fug(0.25)) == Approx(frozen::kRowSum2Quarter).epsilon(1e-15));
  for (int n : {1, 2, 5}) {
    const double g = 1e-6;
    CHECK(row_sum_closed(n, fug(g)) / (n * std::pow(g, n + 1)) == Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("truncated rows plus the analytic tail give the closed row sum") {
  for (double g : {0.1, 0.25, 0.45}) {
    for (int n_max : {20, 60, 200}) {
      const auto u = build_truncated_U(fug(g), n_max);
      for (int n = 1; n <= std::min(10, n_max); ++n) {
        const double row = u.entries.row(n - 1).sum();
        const double closed = row_sum_closed(n, fug(g));
        CHECK(row <= closed * (1 + 1e-14));
        CHECK(std::abs(row + row_sum_tail(n, fug(g), n_max) - closed) <= 1e-12 * closed);
      }
    }
  }
}

TEST_CASE("build_truncated_U") {
  const auto u = build_truncated_U(fug(0.5), 2);
  CHECK(u.dim() == 2);
  CHECK(u.entries(0, 0) == 0.25);
  CHECK(u.entries(0, 1) == 0.125);
  CHECK(u.entries(1, 0) == 0.25);
  CHECK(u.entries(1, 1) == 0.1875);
  CHECK(TruncatedOperator::boundary_size(0) == 1);
  const auto big = build_truncated_U(fug(0.3), 40);
  CHECK(big.entries.minCoeff() > 0.0);
  for (int i = 0; i < 40; i += 7) {
    for (int j = 0; j < 40; j += 5) {
      CHECK(big.entries(i, j) == Approx(u_entry(i + 1, j + 1, fug(0.3))).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(build_truncated_U(fug(0.3), 4097), ResourceError);
  CHECK_THROWS_AS(build_truncated_U(fug(0.3), 1), DomainError);
}

TEST_CASE("z_n_truncated examples") {
  CHECK(z_n_truncated(1, fug(0.3), 1) == Approx(0.09).epsilon(1e-15));
  double pairs = 0.0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) pairs += u_entry(a, b, fug(0.3)) * u_entry(b, a, fug(0.3));
  }
  CHECK(z_n_truncated(2, fug(0.3), 3) == Approx(pairs).epsilon(1e-14));
  CHECK(z_n_truncated(3, fug(0.25), 4) == Approx(frozen::kZ3Quarter_nmax4).epsilon(1e-13));
}

TEST_CASE("z_n_truncated equals the product-of-binomials sum") {
  for (double g : {0.2, 0.3}) {
    for (int N = 1; N <= 4; ++N) {
      for (int n_max = 1; n_max <= 6; ++n_max) {
        const double ref = static_cast<double>(oracle::z_product_sum(N, g, n_max));
        CHECK(rel_close(z_n_truncated(N, fug(g), n_max), ref, 1e-12));
      }
    }
  }
}

TEST_CASE("z_n_truncated is nondecreasing in n_max") {
  for (int N : {1, 2, 5}) {
    double last = 0.0;
    for (int n_max = 1; n_max <= 30; ++n_max) {
      const double z = z_n_truncated(N, fug(0.35), n_max);
      CHECK(z >= last);
      last = z;
    }
  }
}

TEST_CASE("size truncation keeps pairs with n + n' <= s_max") {
  for (int N = 1; N <= 4; ++N) {
    for (int s = 2; s <= 7; ++s) {
      const double ref = static_cast<double>(oracle::z_product_sum(N, 0.3, s - 1, s));
      CHECK(rel_close(z_n_size_truncated(N, fug(0.3), s), ref, 1e-12));
    }
  }
}

TEST_CASE("free energy approaches log Lambda") {
  const std::vector<int> ns{2, 4, 8, 16, 32};
  const auto fe = free_energy_pure(ns, fug(0.25), 64);
  CHECK(std::abs(fe.back() - std::log(frozen::kLambdaQuarter)) < 1e-3);
  const auto top = truncated_spectrum(fug(0.25), 64).principal_eigenvalue;
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(fe[i] <= std::log(top) + std::log(64.0) / ns[i]);
  for (std::size_t i = 2; i < ns.size(); ++i) {
    CHECK(std::abs(fe[i] - fe[i - 1]) <= std::abs(fe[i - 1] - fe[i - 2]));
  }
  CHECK_THROWS_AS(free_energy_pure(ns, fug(0.5), 64), DomainError);
}

TEST_CASE("Hilbert-Schmidt sums stay finite below g = 1/2") {
  double last = 0.0;
  for (int n_max : {10, 40, 160, 320}) {
    const double hs = hilbert_schmidt_sum(fug(0.45), n_max);
    CHECK(std::isfinite(hs));
    CHECK(hs >= last);
    last = hs;
  }
  CHECK(hilbert_schmidt_sum(fug(0.45), 320) - hilbert_schmidt_sum(fug(0.45), 160) < 1e-12);
}
