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

#include "photent/bounds.hpp"

#include <cmath>
#include <numbers>

#include "photent/error.hpp"
#include "photent/fock.hpp"

namespace photent {

std::string to_string(BoundName name) {
  switch (name) {
    case BoundName::bunched_log: return "bunched_log";
    case BoundName::unbunched_2ebit: return "unbunched_2ebit";
    case BoundName::log3_measured: return "log3_measured";
    case BoundName::dimensionality: return "dimensionality";
    case BoundName::linearity: return "linearity";
    case BoundName::mean_photon: return "mean_photon";
  }
  return "unknown";
}

BoundReport check_bound(BoundName name, double bound_value, double observed) {
  return BoundReport{name, bound_value, observed, observed <= bound_value + kBoundSlack,
                     bound_value - observed};
}

DimensionalityBound dimensionality_bound(int alice_modes, int system_photons) {
  if (alice_modes < 1 || system_photons < 0) {
    throw InvalidDomain("dimensionality bound needs M_A >= 1 and n_S >= 0");
  }
  std::uint64_t omega = 1;
  if (system_photons == 0) {
    omega = 1;
  } else if (system_photons % 2 == 1) {
    const int half = (system_photons - 1) / 2;
    omega = 2 * binomial(alice_modes + half, half);
  } else {
    const int half = system_photons / 2;
    const std::uint64_t c = binomial(alice_modes + half - 1, half - 1);
    const auto numerator = 2 * static_cast<std::uint64_t>(system_photons + alice_modes) * c;
    omega = numerator / static_cast<std::uint64_t>(system_photons);
  }
  return DimensionalityBound{omega, std::log2(static_cast<double>(omega))};
}

double linearity_bound(int photons) {
  if (photons < 0) throw InvalidDomain("photon number must be non-negative");
  return static_cast<double>(photons);
}

double bunched_entropy(int photons, double p) {
  if (photons < 1 || !(p >= 0.0 && p <= 1.0)) {
    throw InvalidDomain("bunched_entropy needs n >= 1 and p in [0, 1]");
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  const double n = photons;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double h = 0.0;
  for (int k = 0; k <= photons; ++k) {
    const double log_pmf = std::lgamma(n + 1) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1) +
                           k * log_p + (n - k) * log_q;
    const double pmf = std::exp(log_pmf);
    if (pmf > 0.0) h -= pmf * log_pmf;
  }
  return h / std::numbers::ln2;
}

double mean_constrained_entropy_bound(double mean_photons) {
  if (!(mean_photons >= 0.0)) throw InvalidDomain("mean photon number must be non-negative");
  if (mean_photons == 0.0) return 0.0;
  const double n = mean_photons;
  return (1.0 + n) * std::log2(1.0 + n) - n * std::log2(n);
}

double jensen_log3_bound(std::span<const double> q) {
  double total = 0.0;
  double mean = 0.0;
  double value = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] < 0.0) throw InvalidDomain("probabilities must be non-negative");
    total += q[j];
    mean += static_cast<double>(j) * q[j];
    value += q[j] * std::log2(static_cast<double>(j) + 2.0);
  }
  if (std::abs(total - 1.0) > 1e-12 || std::abs(mean - 1.0) > 1e-12) {
    throw InvalidDomain("distribution must have total 1 and mean 1");
  }
  return value;
}

std::vector<BoundRow> bounds_table(std::span<const int> alice_modes, std::span<const int> photons) {
  std::vector<BoundRow> rows;
  for (int ma : alice_modes) {
    for (int n : photons) {
      if (ma == 1) {
        rows.push_back({BoundName::bunched_log, ma, n, bunched_entropy(n, 0.5)});
        rows.push_back({BoundName::unbunched_2ebit, ma, n, 2.0});
        rows.push_back({BoundName::log3_measured, ma, n, std::log2(3.0)});
      }
      rows.push_back({BoundName::dimensionality, ma, n, dimensionality_bound(ma, n).ebits});
      rows.push_back({BoundName::linearity, ma, n, linearity_bound(n)});
    }
  }
  return rows;
}

}  // namespace photent
