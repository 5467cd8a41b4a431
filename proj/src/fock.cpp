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

#include "photent/fock.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "photent/error.hpp"

namespace photent {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw InvalidDomain("occupation counts must be non-negative");
  }
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

OccupationVector OccupationVector::unbunched(int modes, int photons) {
  if (photons < 0 || photons > modes) {
    throw InvalidDomain("unbunched input needs 0 <= photons <= modes");
  }
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  std::fill_n(counts.begin(), photons, 1);
  return OccupationVector(std::move(counts));
}

std::string OccupationVector::to_string() const {
  const bool compact = std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 9; });
  std::string out;
  if (compact) {
    for (int c : counts_) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(counts_[i]);
  }
  out.push_back(']');
  return out;
}

OccupationVector OccupationVector::parse(const std::string& text) {
  std::vector<int> counts;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidDomain("unterminated occupation list: " + text);
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      const std::string item = body.substr(pos, next - pos);
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
        throw InvalidDomain("bad occupation entry in " + text);
      }
      counts.push_back(std::stoi(item));
      pos = next + 1;
    }
    return OccupationVector(std::move(counts));
  }
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidDomain("bad occupation string: " + text);
    }
    counts.push_back(ch - '0');
  }
  return OccupationVector(std::move(counts));
}

OccupationVector concat(const OccupationVector& a, const OccupationVector& b) {
  std::vector<int> counts = a.counts();
  counts.insert(counts.end(), b.counts().begin(), b.counts().end());
  return OccupationVector(std::move(counts));
}

OccupationVector concat(const OccupationVector& a, const OccupationVector& b,
                        const OccupationVector& c) {
  return concat(concat(a, b), c);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 62) throw InvalidDomain("binomial argument too large for 64-bit arithmetic");
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  // result * (n - k + i) is always divisible by i at step i.
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t dimension(int modes, int photons) {
  if (modes < 0 || photons < 0) throw InvalidDomain("negative mode or photon count");
  if (modes == 0) {
    if (photons > 0) throw InvalidDomain("photons require at least one mode");
    return 1;
  }
  if (modes + photons > 40) throw InvalidDomain("M + n exceeds the supported range (40)");
  return binomial(modes + photons - 1, photons);
}

namespace {

void enumerate_into(int mode, int remaining, std::vector<int>& scratch,
                    std::vector<OccupationVector>& out) {
  const int last = static_cast<int>(scratch.size()) - 1;
  if (mode == last) {
    scratch[static_cast<std::size_t>(mode)] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    scratch[static_cast<std::size_t>(mode)] = c;
    enumerate_into(mode + 1, remaining - c, scratch, out);
  }
}

}  // namespace

FockBasis::FockBasis(int modes, int photons) : modes_(modes), photons_(photons) {
  const std::uint64_t dim = dimension(modes, photons);
  states_.reserve(dim);
  if (modes == 0) {
    states_.emplace_back();
    return;
  }
  std::vector<int> scratch(static_cast<std::size_t>(modes), 0);
  enumerate_into(0, photons, scratch, states_);
}

std::size_t FockBasis::index(const OccupationVector& v) const {
  if (v.modes() != modes_ || v.total() != photons_) {
    throw InvalidDomain("occupation vector " + v.to_string() + " is outside the basis");
  }
  return fock_rank(v.span());
}

std::size_t fock_rank(std::span<const int> counts) {
  const int modes = static_cast<int>(counts.size());
  int remaining = 0;
  for (int c : counts) remaining += c;
  std::size_t rank = 0;
  for (int i = 0; i + 1 < modes; ++i) {
    const int tail_modes = modes - i - 1;
    for (int c = counts[i] + 1; c <= remaining; ++c) rank += dimension(tail_modes, remaining - c);
    remaining -= counts[i];
  }
  return rank;
}

FockBasis enumerate(int modes, int photons) { return FockBasis(modes, photons); }

SplitVector split(const OccupationVector& v, const Partition& partition) {
  if (partition.alice < 0 || partition.bob < 0 || partition.herald < 0 ||
      partition.modes() != v.modes()) {
    throw InvalidDomain("partition does not match the mode count of " + v.to_string());
  }
  const auto& c = v.counts();
  auto a0 = c.begin();
  auto b0 = a0 + partition.alice;
  auto h0 = b0 + partition.bob;
  return SplitVector{OccupationVector(std::vector<int>(a0, b0)),
                     OccupationVector(std::vector<int>(b0, h0)),
                     OccupationVector(std::vector<int>(h0, c.end()))};
}

}  // namespace photent
