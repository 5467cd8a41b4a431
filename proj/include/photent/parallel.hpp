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

#include <cstddef>
#include <cstdint>
#include <functional>

namespace photent {

/// Runs fn(0) ... fn(count - 1) on up to `workers` threads pulling from a
/// shared counter. workers <= 0 means std::thread::hardware_concurrency().
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

/// Resolved worker count (never below 1).
int resolve_workers(int workers);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for trial `index` of a run with `master` seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace photent
