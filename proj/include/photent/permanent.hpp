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

#include <span>

#include "photent/fock.hpp"
#include "photent/unitary.hpp"

namespace photent {

/// Square k x k matrix whose permanent gives a k-photon transition amplitude.
using AmplitudeMatrix = CMatrix;

inline constexpr int kMaxPermanentOrder = 20;

/// Ryser's formula with Gray-code subset order, O(2^k k). The empty matrix
/// has permanent 1. Throws CapacityError for k > kMaxPermanentOrder.
Complex permanent(const AmplitudeMatrix& a);

/// Same kernel over column-major storage of a k x k matrix.
Complex permanent_colmajor(std::span<const Complex> data, int k);

/// U_{psi phi}: input[j] copies of column j, then output[j] copies of row j.
AmplitudeMatrix build_transition(const Interferometer& u, const OccupationVector& input,
                                 const OccupationVector& output);

}  // namespace photent
