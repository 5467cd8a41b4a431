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

// Slow reference routes used only for verification. None of these share
// code with the production kernels they check.

#include <map>
#include <vector>

#include "photent/fock.hpp"
#include "photent/unitary.hpp"

namespace photent::oracle {

/// Permanent by explicit sum over all k! permutations.
Complex naive_permanent(const CMatrix& a);

/// Output state by expanding prod_k (sum_j U_jk a_j^dagger)^{n_k} / sqrt(n_k!) |vac>
/// as a polynomial in creation operators.
std::map<OccupationVector, Complex> expand_creation_operators(const CMatrix& u,
                                                              const OccupationVector& input);

/// sum_{n_A} min(dim(M_A, n_A), dim(M_B, n_S - n_A)).
std::uint64_t schmidt_capacity(int alice_modes, int bob_modes, int system_photons);

/// Eigenvalues of Alice's reduced density matrix for a pure state over
/// (alice | rest) modes, built densely from the state's amplitudes.
std::vector<double> reduced_state_eigenvalues(const std::map<OccupationVector, Complex>& state,
                                              int alice_modes);

/// -sum p log2 p with an explicit zero cut.
double shannon_bits(const std::vector<double>& p);

}  // namespace photent::oracle
