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

#include <array>
#include <span>
#include <vector>

#include "photent/simulate.hpp"

namespace photent {

/// Squared Schmidt coefficients grouped by Alice's photon number.
struct SchmidtSpectrum {
  std::vector<std::vector<double>> sectors;

  std::vector<double> weights() const;
  /// Number of weights above `threshold`.
  int rank(double threshold = 1e-12) const;
};

/// Sector-wise SVD of the coefficient matrices. Throws InvalidDomain for an
/// impossible outcome.
SchmidtSpectrum schmidt_spectrum(const HeraldedState& hs);

/// Von Neumann entropy in ebits, -sum w log2 w. Weights below 1e-15 count as zero.
double entropy(std::span<const double> weights);
double entropy(const SchmidtSpectrum& spectrum);

/// Entropy of Alice's reduced state for one heralded outcome.
double entanglement(const HeraldedState& hs);

/// sum_h P(h, U) S(rho_A(h, U)), skipping impossible outcomes.
double average_entanglement(const ExperimentSetup& setup);
double average_entanglement(const HeraldPlan& plan, const Interferometer& u);
double average_entanglement(std::span<const HeraldedState> outcomes);

/// Entropy of Alice against Bob and Harold together, before any detection.
double pre_measurement_entanglement(const ExperimentSetup& setup);

/// Dual-rail reading of a 2+2 mode heralded state. The qubit amplitudes are
/// ordered |00>, |01>, |10>, |11> for system states 1010, 1001, 0110, 0101.
struct DualRailProjection {
  std::array<Complex, 4> qubit_state{};
  double in_subspace_weight = 0.0;
};

/// Throws InvalidDomain unless the partition has alice = bob = 2.
DualRailProjection dual_rail_project(const HeraldedState& hs);

/// Entanglement entropy of a normalized two-qubit pure state (zero for the zero vector).
double qubit_entanglement(const std::array<Complex, 4>& state);

}  // namespace photent
