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

// Fock-state evolution through an interferometer and heralded measurement.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "photent/fock.hpp"
#include "photent/unitary.hpp"

namespace photent {

/// Heralding outcomes with probability below this are treated as impossible.
inline constexpr double kImpossibleProbability = 1e-14;

/// Exact n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

struct ExperimentSetup {
  Interferometer u;
  OccupationVector input;
  Partition partition;

  /// Throws InvalidDomain unless input spans all modes with 1 <= n <= 20,
  /// partition entries are non-negative, alice >= 1 and they sum to M.
  void validate() const;
  int photons() const { return input.total(); }
};

/// <output| U^(n) |input> = perm(U_{psi phi}) / sqrt(prod input_i! prod output_j!).
Complex amplitude(const Interferometer& u, const OccupationVector& input,
                  const OccupationVector& output);

/// Amplitudes over the full n-photon basis of all M modes, in basis order.
struct OutputState {
  FockBasis basis;
  std::vector<Complex> amplitudes;

  Complex amplitude_of(const OccupationVector& v) const { return amplitudes[basis.index(v)]; }
};

OutputState full_output(const ExperimentSetup& setup);

/// Post-measurement state of Alice and Bob after Harold observes `pattern`.
/// Coefficients are grouped by Alice's photon number: sectors[n_A] is a
/// dimension(M_A, n_A) x dimension(M_B, n_S - n_A) matrix of normalized
/// coefficients C_{a,b}, rows and columns in Fock basis order.
struct HeraldedState {
  OccupationVector pattern;
  Partition partition;
  int system_photons = 0;
  double probability = 0.0;
  bool possible = false;
  std::vector<CMatrix> sectors;

  /// Normalized C_{a,b}; throws InvalidDomain outside the sector or when impossible.
  Complex coefficient(const OccupationVector& a, const OccupationVector& b) const;
  /// Unnormalized amplitude sqrt(P) * C_{a,b}.
  Complex unnormalized(const OccupationVector& a, const OccupationVector& b) const;
};

/// Particle-notation coefficient: unnormalized C_{a,b} / sqrt(prod a_i! prod b_j!).
Complex particle_coefficient(const HeraldedState& hs, const OccupationVector& a,
                             const OccupationVector& b);

/// U-independent bookkeeping for heralding a fixed input over a fixed
/// partition. Building the plan enumerates every pattern and every system
/// basis state once; evaluation then only computes permanents.
class HeraldPlan {
 public:
  HeraldPlan(OccupationVector input, Partition partition);

  const OccupationVector& input() const { return input_; }
  const Partition& partition() const { return partition_; }
  int photons() const { return input_.total(); }

  /// Patterns ordered by detected photon count, then by Fock basis order.
  const std::vector<OccupationVector>& patterns() const { return patterns_; }
  /// Indices of patterns leaving exactly `system_photons` photons in A and B.
  std::vector<std::size_t> patterns_with_system_photons(int system_photons) const;

  HeraldedState evaluate(const Interferometer& u, std::size_t pattern_index) const;
  std::vector<HeraldedState> evaluate_all(const Interferometer& u) const;

 private:
  struct SystemState {
    int sector;
    int row;
    int col;
    std::vector<int> modes;  // output mode of each system photon
    double factorial_product;
  };
  struct SystemLayout {
    std::vector<std::pair<int, int>> sector_shapes;
    std::vector<SystemState> states;
  };

  OccupationVector input_;
  Partition partition_;
  std::vector<int> input_modes_;
  double input_factorials_ = 1.0;
  std::vector<OccupationVector> patterns_;
  std::vector<SystemLayout> layouts_;  // indexed by system photon count
};

std::vector<HeraldedState> herald_all(const ExperimentSetup& setup);
HeraldedState herald(const ExperimentSetup& setup, const OccupationVector& pattern);

nlohmann::json to_json(const HeraldedState& hs);

}  // namespace photent
