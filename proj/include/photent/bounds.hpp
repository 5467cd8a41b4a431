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

#pragma once

// Closed-form entanglement bounds for linear-optical mode entanglement and
// checkers comparing simulated values against them. All values in ebits.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace photent {

inline constexpr double kBoundSlack = 1e-9;

enum class BoundName { bunched_log, unbunched_2ebit, log3_measured, dimensionality, linearity, mean_photon };

std::string to_string(BoundName name);

struct BoundReport {
  BoundName bound_name;
  double bound_value;
  double observed;
  bool satisfied;
  double margin;  // bound_value - observed
};

/// satisfied iff observed <= bound + kBoundSlack.
BoundReport check_bound(BoundName name, double bound_value, double observed);

struct DimensionalityBound {
  std::uint64_t omega;  // maximal Schmidt rank
  double ebits;         // log2(omega)
};

/// Maximal Schmidt rank for M_A = M_B modes holding n_S photons in total.
DimensionalityBound dimensionality_bound(int alice_modes, int system_photons);

/// n ebits for n photons.
double linearity_bound(int photons);

/// Entropy of Binomial(n, p) in bits.
double bunched_entropy(int photons, double p);

/// Maximum entropy of a photon-number distribution with mean N,
/// log2((1+N)^(1+N) / N^N). Throws InvalidDomain for N < 0.
double mean_constrained_entropy_bound(double mean_photons);

/// sum_j q_j log2(j + 2) for a distribution with sum q = 1 and mean 1
/// (both to 1e-12). Throws InvalidDomain otherwise.
double jensen_log3_bound(std::span<const double> q);

/// One row of the bounds table.
struct BoundRow {
  BoundName bound_name;
  int alice_modes;
  int photons;
  double bound_ebits;
};

/// Every applicable bound for each (M_A, n) on the grid. The single-mode
/// bounds (bunched_log, unbunched_2ebit, log3_measured) appear only for M_A = 1.
std::vector<BoundRow> bounds_table(std::span<const int> alice_modes, std::span<const int> photons);

}  // namespace photent
