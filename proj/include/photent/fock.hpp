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

// Bosonic occupation-number bases.
//
// A FockBasis lists every occupation vector of `mode_count` modes holding
// exactly `photon_count` photons, in lexicographically descending order:
// (n,0,...,0) first and (0,...,0,n) last.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace photent {

class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  /// Unbunched input: one photon in each of the first `photons` of `modes`.
  static OccupationVector unbunched(int modes, int photons);

  int modes() const { return static_cast<int>(counts_.size()); }
  int total() const { return total_; }
  int operator[](int mode) const { return counts_[static_cast<std::size_t>(mode)]; }
  const std::vector<int>& counts() const { return counts_; }
  std::span<const int> span() const { return counts_; }

  /// Digit string ("1010") when every count is <= 9, else "[10,0,2]".
  std::string to_string() const;
  static OccupationVector parse(const std::string& text);

  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;
  friend std::strong_ordering operator<=>(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// Concatenate occupation vectors (system modes followed by herald modes, etc).
OccupationVector concat(const OccupationVector& a, const OccupationVector& b);
OccupationVector concat(const OccupationVector& a, const OccupationVector& b,
                        const OccupationVector& c);

/// Modes split into Alice (top), Bob (middle) and Harold (bottom, measured).
struct Partition {
  int alice = 0;
  int bob = 0;
  int herald = 0;

  int system() const { return alice + bob; }
  int modes() const { return alice + bob + herald; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct SplitVector {
  OccupationVector alice;
  OccupationVector bob;
  OccupationVector herald;
};

/// Exact binomial coefficient C(n, k); requires n <= 62.
std::uint64_t binomial(int n, int k);

/// Number of ways to place n photons in M modes, C(M+n-1, n).
/// Throws InvalidDomain for M = 0 with n > 0, negative arguments, or M+n > 40.
std::uint64_t dimension(int modes, int photons);

class FockBasis {
 public:
  FockBasis(int modes, int photons);

  int mode_count() const { return modes_; }
  int photon_count() const { return photons_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<OccupationVector>& states() const { return states_; }
  const OccupationVector& operator[](std::size_t i) const { return states_[i]; }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  /// Position of `v` in the basis, computed by combinatorial ranking.
  /// Throws InvalidDomain if `v` does not belong to this basis.
  std::size_t index(const OccupationVector& v) const;

 private:
  int modes_;
  int photons_;
  std::vector<OccupationVector> states_;
};

FockBasis enumerate(int modes, int photons);

/// Position of `counts` within the basis of its own mode and photon count.
std::size_t fock_rank(std::span<const int> counts);

SplitVector split(const OccupationVector& v, const Partition& partition);

}  // namespace photent
