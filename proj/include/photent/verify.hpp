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

// Property suite behind `photent verify`. The permanent kernel is a
// parameter so the suite can be pointed at a deliberately broken one.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "photent/permanent.hpp"

namespace photent {

using PermanentKernel = std::function<Complex(const AmplitudeMatrix&)>;

struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Production Ryser kernel.
PermanentKernel default_permanent_kernel();

/// Ryser kernel with the overall (-1)^k sign dropped.
PermanentKernel mutated_permanent_kernel();

std::vector<PropertyResult> run_property_suite(const PermanentKernel& kernel, std::uint64_t seed = 20260101);

}  // namespace photent
