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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "photent/error.hpp"
#include "photent/oracles.hpp"
#include "photent/simulate.hpp"

using namespace photent;

namespace {

OccupationVector random_input(int m, int n, std::mt19937_64& rng) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(pick(rng))];
  return OccupationVector(counts);
}

}  // namespace

TEST_CASE("Hong-Ou-Mandel amplitudes") {
  const Interferometer bs1 = fixture(FixtureId::BS1);
  CHECK(std::abs(amplitude(bs1, {1, 1}, {1, 1})) <= 1e-12);
  CHECK(std::abs(amplitude(bs1, {1, 1}, {2, 0}) - Complex(std::sqrt(0.5), 0.0)) <= 1e-12);
  CHECK_THROWS_AS(amplitude(bs1, {1, 1}, {1, 0}), InvalidDomain);
}

TEST_CASE("identity interferometer moves nothing") {
  const Interferometer id = Interferometer::identity(4);
  for (const auto& v : enumerate(4, 3)) {
    for (const auto& w : enumerate(4, 3)) {
      CHECK(std::abs(amplitude(id, v, w) - Complex(v == w ? 1.0 : 0.0, 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("full_output of BS2 on one photon per mode") {
  const double t = bs2_angle();
  const double c = std::cos(t), s = std::sin(t);
  const OutputState out = full_output({fixture(FixtureId::BS2), {1, 1}, {1, 1, 0}});
  REQUIRE(out.amplitudes.size() == 3);
  CHECK(std::abs(out.amplitudes[0] - Complex(std::sqrt(2.0) * c * s, 0)) < 1e-14);
  CHECK(std::abs(out.amplitudes[1] - Complex(c * c - s * s, 0)) < 1e-14);
  CHECK(std::abs(out.amplitudes[2] - Complex(-std::sqrt(2.0) * c * s, 0)) < 1e-14);
}

TEST_CASE("balanced beamsplitter on a bunched input is binomial") {
  for (int n = 1; n <= 10; ++n) {
    const OutputState out = full_output({fixture(FixtureId::BS1), {n, 0}, {1, 1, 0}});
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      const int k = out.basis[i][0];
      const double expected = static_cast<double>(binomial(n, k)) / std::pow(2.0, n);
      CHECK(std::abs(std::norm(out.amplitudes[i]) - expected) < 1e-12);
    }
  }
}

TEST_CASE("full_output agrees with the creation-operator expansion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 1 + trial % 4;
    const Interferometer u = haar_sample(m, rng());
    const OccupationVector input = random_input(m, n, rng);
    const OutputState out = full_output({u, input, {m, 0, 0}});
    const auto ref = oracle::expand_creation_operators(u.matrix(), input);
    REQUIRE(ref.size() == out.basis.size());
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      CHECK(std::abs(out.amplitudes[i] - ref.at(out.basis[i])) < 1e-12);
    }
  }
}

TEST_CASE("output norm is preserved up to M = 6, n = 5") {
  std::mt19937_64 rng(37);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const OutputState out = full_output({haar_sample(m, rng()), random_input(m, n, rng), {m, 0, 0}});
      double total = 0.0;
      for (const auto& a : out.amplitudes) total += std::norm(a);
      CHECK(std::abs(total - 1.0) <= 1e-10);
      for (const auto& v : out.basis) CHECK(v.total() == n);
    }
  }
}

TEST_CASE("mean photon number per output mode") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 1 + (trial / 5) % 4;
    const Interferometer u = haar_sample(m, rng());
    const OccupationVector input = random_input(m, n, rng);
    const OutputState out = full_output({u, input, {m, 0, 0}});
    for (int j = 0; j < m; ++j) {
      double simulated = 0.0;
      for (std::size_t i = 0; i < out.basis.size(); ++i) simulated += std::norm(out.amplitudes[i]) * out.basis[i][j];
      double predicted = 0.0;
      for (int k = 0; k < m; ++k) predicted += std::norm(u(j, k)) * input[k];
      CHECK(std::abs(simulated - predicted) <= 1e-10);
    }
  }
}

TEST_CASE("herald_all without heralding regroups the full output") {
  const ExperimentSetup setup{haar_sample(3, 2), {1, 1, 0}, {1, 2, 0}};
  const auto outcomes = herald_all(setup);
  REQUIRE(outcomes.size() == 1);
  CHECK(outcomes[0].pattern.modes() == 0);
  CHECK(std::abs(outcomes[0].probability - 1.0) < 1e-12);
  const OutputState out = full_output(setup);
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    const SplitVector p = split(out.basis[i], setup.partition);
    CHECK(std::abs(outcomes[0].coefficient(p.alice, p.bob) - out.amplitudes[i]) < 1e-12);
  }
}

TEST_CASE("identity with one photon per mode heralds deterministically") {
  const auto outcomes = herald_all({Interferometer::identity(3), {1, 1, 1}, {1, 1, 1}});
  REQUIRE(outcomes.size() == 4);  // patterns 0, 1, 2, 3
  int possible = 0;
  for (const auto& hs : outcomes) {
    if (!hs.possible) {
      CHECK(hs.sectors.empty());
      continue;
    }
    ++possible;
    CHECK(hs.pattern == OccupationVector{1});
    CHECK(std::abs(hs.probability - 1.0) < 1e-14);
    CHECK(std::abs(std::abs(hs.coefficient({1}, {1})) - 1.0) < 1e-14);
  }
  CHECK(possible == 1);
}

TEST_CASE("herald probabilities are complete and states normalized") {
  std::mt19937_64 rng(43);
  const std::vector<std::pair<OccupationVector, Partition>> cases = {
      {{1, 1, 1, 0, 0}, {2, 2, 1}},
      {{1, 1, 1, 1, 0, 0}, {1, 2, 3}},
      {{2, 1, 0, 0}, {1, 1, 2}},
      {{1, 1, 1, 1, 0, 0, 0, 0}, {2, 2, 4}},
  };
  for (const auto& [input, partition] : cases) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto outcomes = herald_all({haar_sample(input.modes(), rng()), input, partition});
      double total = 0.0;
      for (const auto& hs : outcomes) {
        CHECK(hs.probability >= 0.0);
        total += hs.probability;
        if (!hs.possible) continue;
        double norm = 0.0;
        for (const auto& s : hs.sectors) norm += s.squaredNorm();
        CHECK(std::abs(norm - 1.0) <= 1e-10);
      }
      CHECK(std::abs(total - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("patterns come in canonical order") {
  const HeraldPlan plan({1, 1, 1, 0, 0}, {2, 1, 2});
  const auto& p = plan.patterns();
  REQUIRE(p.size() == 10);  // dimensions 1 + 2 + 3 + 4
  CHECK(p[0] == OccupationVector{0, 0});
  CHECK(p[1] == OccupationVector{1, 0});
  CHECK(p[2] == OccupationVector{0, 1});
  CHECK(p[9] == OccupationVector{0, 3});
  CHECK(plan.patterns_with_system_photons(1).size() == 3);
}

TEST_CASE("particle-notation coefficients") {
  const Interferometer u = haar_sample(5, 77);
  const ExperimentSetup setup{u, {1, 1, 1, 0, 0}, {2, 2, 1}};
  const HeraldedState hs = herald(setup, OccupationVector{1});
  REQUIRE(hs.possible);

  // gamma_kj = sum over permutations of U_{k s1} U_{j s2} U_{5 s3}, halved when k = j.
  auto gamma = [&](int k, int j) {
    std::array<int, 3> sigma{0, 1, 2};
    Complex total{};
    do {
      total += u(k, sigma[0]) * u(j, sigma[1]) * u(4, sigma[2]);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return k == j ? total / 2.0 : total;
  };
  const Complex g11 = particle_coefficient(hs, {2, 0}, {0, 0});
  CHECK(std::abs(g11 - gamma(0, 0)) < 1e-12);
  CHECK(std::abs(hs.unnormalized({2, 0}, {0, 0}) - std::sqrt(2.0) * gamma(0, 0)) < 1e-12);

  // Unit counts: gamma equals the unnormalized coefficient.
  CHECK(particle_coefficient(hs, {1, 0}, {1, 0}) == hs.unnormalized({1, 0}, {1, 0}));
  CHECK(std::abs(particle_coefficient(hs, {1, 0}, {1, 0}) - gamma(0, 2)) < 1e-12);
  CHECK(std::abs(particle_coefficient(hs, {0, 0}, {0, 2}) - hs.unnormalized({0, 0}, {0, 2}) / std::sqrt(2.0)) <
        1e-15);

  CHECK_THROWS_AS(particle_coefficient(hs, {1, 1}, {1, 0}), InvalidDomain);
  CHECK_THROWS_AS(hs.coefficient({1, 0, 0}, {1, 0}), InvalidDomain);
}

TEST_CASE("setup validation") {
  const Interferometer u = haar_sample(3, 1);
  CHECK_THROWS_AS(herald_all({u, {0, 0, 0}, {1, 1, 1}}), InvalidDomain);
  CHECK_THROWS_AS(herald_all({u, {1, 1, 0}, {0, 2, 1}}), InvalidDomain);
  CHECK_THROWS_AS(herald_all({u, {1, 1, 0}, {1, 1, 0}}), InvalidDomain);
  CHECK_THROWS_AS(herald_all({u, {1, 1}, {1, 1, 0}}), InvalidDomain);
  CHECK_THROWS_AS(herald({u, {1, 1, 0}, {1, 1, 1}}, OccupationVector{3}), InvalidDomain);
}

TEST_CASE("heralded state JSON") {
  const HeraldedState hs = herald({fixture(FixtureId::BS1), {1, 0}, {1, 1, 0}}, OccupationVector{});
  const nlohmann::json j = to_json(hs);
  CHECK(j.at("pattern") == "");
  CHECK(std::abs(j.at("prob").get<double>() - 1.0) < 1e-15);
  REQUIRE(j.at("amplitudes").size() == 2);
  CHECK(j.at("amplitudes")[0].at("a") == "0");
  CHECK(j.at("amplitudes")[0].at("b") == "1");
  CHECK(std::abs(j.at("amplitudes")[1].at("re").get<double>() - std::sqrt(0.5)) < 1e-15);
}
