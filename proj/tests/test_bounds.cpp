// Copyright 2026 The photent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "photent/bounds.hpp"
#include "photent/entangle.hpp"
#include "photent/error.hpp"
#include "photent/oracles.hpp"

using namespace photent;

TEST_CASE("dimensionality bound") {
  CHECK(dimensionality_bound(2, 2).omega == 4);
  CHECK(dimensionality_bound(2, 2).ebits == 2.0);
  CHECK(dimensionality_bound(1, 1).omega == 2);
  CHECK(dimensionality_bound(1, 1).ebits == 1.0);
  CHECK(dimensionality_bound(3, 0).omega == 1);
  for (int ma = 1; ma <= 5; ++ma) {
    for (int ns = 0; ns <= 8; ++ns) {
      CAPTURE(ma);
      CAPTURE(ns);
      CHECK(dimensionality_bound(ma, ns).omega == oracle::schmidt_capacity(ma, ma, ns));
    }
  }
}

TEST_CASE("observed Schmidt rank never exceeds the dimensionality bound") {
  std::mt19937_64 rng(21);
  const std::vector<std::pair<OccupationVector, Partition>> cases = {
      {{1, 1, 1, 1}, {2, 2, 0}}, {{1, 1, 1, 1, 0}, {2, 2, 1}}, {{1, 1, 1, 1, 1, 0}, {2, 2, 2}}, {{1, 2, 0, 0}, {2, 2, 0}}};
  for (const auto& [input, partition] : cases) {
    for (int trial = 0; trial < 10; ++trial) {
      for (const auto& hs : herald_all({haar_sample(input.modes(), rng()), input, partition})) {
        if (!hs.possible) continue;
        const auto bound = dimensionality_bound(partition.alice, hs.system_photons);
        CHECK(static_cast<std::uint64_t>(schmidt_spectrum(hs).rank()) <= bound.omega);
        CHECK(check_bound(BoundName::dimensionality, bound.ebits, entanglement(hs)).satisfied);
      }
    }
  }
}

TEST_CASE("linearity bound") {
  CHECK(linearity_bound(4) == 4.0);
  CHECK(linearity_bound(0) == 0.0);
}

TEST_CASE("binomial entropy") {
  CHECK(bunched_entropy(1, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bunched_entropy(2, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
  const double asymptotic = 0.5 * std::log2(std::numbers::pi * std::numbers::e * 200.0 / 2.0);
  CHECK(std::abs(bunched_entropy(200, 0.5) - asymptotic) <= 0.01);
  CHECK(bunched_entropy(5, 0.0) == 0.0);
  CHECK(bunched_entropy(5, 1.0) == 0.0);

  for (int n : {1, 3, 10}) {
    double best = -1.0;
    int best_k = -1;
    for (int k = 1; k <= 99; ++k) {
      const double s = bunched_entropy(n, k / 100.0);
      if (s > best) {
        best = s;
        best_k = k;
      }
    }
    CHECK(best_k == 50);
  }
}

TEST_CASE("mean-constrained entropy bound") {
  CHECK(mean_constrained_entropy_bound(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mean_constrained_entropy_bound(0.0) == 0.0);
  double last = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double v = mean_constrained_entropy_bound(i / 10.0);
    CHECK(v > last);
    last = v;
  }
  CHECK_THROWS_AS(mean_constrained_entropy_bound(-0.1), InvalidDomain);
}

TEST_CASE("Jensen log 3 bound") {
  const double log3 = std::log2(3.0);
  CHECK(jensen_log3_bound(std::vector<double>{0.0, 1.0}) == doctest::Approx(log3).epsilon(1e-15));
  CHECK(jensen_log3_bound(std::vector<double>{0.5, 0.0, 0.5}) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(jensen_log3_bound(std::vector<double>{0.5, 0.5}), InvalidDomain);
  CHECK_THROWS_AS(jensen_log3_bound(std::vector<double>{0.0, 0.9}), InvalidDomain);

  // Random distributions on {0..5}, shifted to unit mean by mixing with
  // a two-point distribution on {0, k} or {k, 5}.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0;
  while (accepted < 1000) {
    std::vector<double> q(6);
    double total = 0.0;
    for (auto& x : q) total += (x = u(rng));
    double mean = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) mean += j * (q[j] /= total);
    if (mean <= 1.0) continue;
    // Mix with a point mass at zero so the mean becomes exactly one.
    const double lambda = 1.0 / mean;
    for (auto& x : q) x *= lambda;
    q[0] += 1.0 - lambda;
    ++accepted;
    CHECK(jensen_log3_bound(q) <= log3 + 1e-12);
  }
}

TEST_CASE("bound checks and table") {
  const BoundReport ok = check_bound(BoundName::linearity, 2.0, 2.0 + 5e-10);
  CHECK(ok.satisfied);
  CHECK(ok.margin == doctest::Approx(-5e-10));
  CHECK_FALSE(check_bound(BoundName::linearity, 2.0, 2.0 + 2e-9).satisfied);
  CHECK(to_string(BoundName::log3_measured) == "log3_measured");

  const std::vector<int> ma{1, 2};
  const std::vector<int> n{1, 2, 3};
  const auto rows = bounds_table(ma, n);
  int single_mode = 0;
  for (const auto& r : rows) {
    if (r.bound_name == BoundName::bunched_log || r.bound_name == BoundName::unbunched_2ebit ||
        r.bound_name == BoundName::log3_measured) {
      CHECK(r.alice_modes == 1);
      ++single_mode;
    }
    if (r.bound_name == BoundName::linearity) CHECK(r.bound_ebits == r.photons);
    if (r.bound_name == BoundName::dimensionality) {
      CHECK(r.bound_ebits == dimensionality_bound(r.alice_modes, r.photons).ebits);
    }
  }
  CHECK(single_mode > 0);
}
