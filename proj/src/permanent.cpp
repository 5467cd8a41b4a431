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

#include "photent/permanent.hpp"

#include <array>
#include <bit>
#include <cstdint>

#include "photent/error.hpp"

namespace photent {

namespace {

// Orders from here on accumulate in extended precision. Their subset sums
// cancel over many more terms and lose digits in double.
constexpr int kExtendedFromOrder = 12;

// Gray-code Ryser over column-major data, with Real row sums and accumulator.
// perm(A) = (-1)^k sum_S (-1)^{|S|} prod_i sum_{j in S} a_ij
template <typename Real>
Complex ryser(const Complex* data, int k) {
  std::array<Real, kMaxPermanentOrder> sum_re{};
  std::array<Real, kMaxPermanentOrder> sum_im{};
  const std::uint32_t subsets = 1u << k;
  std::uint32_t gray = 0;
  Real acc_re = 0;
  Real acc_im = 0;
  for (std::uint32_t g = 1; g < subsets; ++g) {
    const int col = std::countr_zero(g);
    const std::uint32_t bit = 1u << col;
    gray ^= bit;
    const Complex* column = data + static_cast<std::size_t>(col) * k;
    if (gray & bit) {
      for (int i = 0; i < k; ++i) {
        sum_re[i] += column[i].real();
        sum_im[i] += column[i].imag();
      }
    } else {
      for (int i = 0; i < k; ++i) {
        sum_re[i] -= column[i].real();
        sum_im[i] -= column[i].imag();
      }
    }
    Real re = sum_re[0];
    Real im = sum_im[0];
    for (int i = 1; i < k; ++i) {
      const Real t = re * sum_re[i] - im * sum_im[i];
      im = re * sum_im[i] + im * sum_re[i];
      re = t;
    }
    if (std::popcount(gray) & 1) {
      acc_re -= re;
      acc_im -= im;
    } else {
      acc_re += re;
      acc_im += im;
    }
  }
  if (k & 1) {
    acc_re = -acc_re;
    acc_im = -acc_im;
  }
  return {static_cast<double>(acc_re), static_cast<double>(acc_im)};
}

}  // namespace

Complex permanent_colmajor(std::span<const Complex> data, int k) {
  if (k < 0) throw InvalidDomain("negative matrix order");
  if (k > kMaxPermanentOrder) {
    throw CapacityError("permanent order " + std::to_string(k) + " exceeds limit of " +
                        std::to_string(kMaxPermanentOrder));
  }
  if (data.size() < static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw InvalidDomain("permanent storage smaller than k*k");
  }
  if (k == 0) return {1.0, 0.0};
  if (k == 1) return data[0];
  return k < kExtendedFromOrder ? ryser<double>(data.data(), k) : ryser<long double>(data.data(), k);
}

Complex permanent(const AmplitudeMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidDomain("permanent requires a square matrix");
  const int k = static_cast<int>(a.rows());
  if (k > kMaxPermanentOrder) {
    throw CapacityError("permanent order " + std::to_string(k) + " exceeds limit of " +
                        std::to_string(kMaxPermanentOrder));
  }
  return permanent_colmajor(std::span<const Complex>(a.data(), static_cast<std::size_t>(a.size())), k);
}

AmplitudeMatrix build_transition(const Interferometer& u, const OccupationVector& input,
                                 const OccupationVector& output) {
  if (input.modes() != u.dim() || output.modes() != u.dim()) {
    throw InvalidDomain("occupation vectors must span all interferometer modes");
  }
  if (input.total() != output.total()) {
    throw InvalidDomain("photon number mismatch between " + input.to_string() + " and " +
                        output.to_string());
  }
  const int k = input.total();
  AmplitudeMatrix m(k, k);
  int col = 0;
  for (int j = 0; j < u.dim(); ++j) {
    for (int rep = 0; rep < input[j]; ++rep, ++col) {
      int row = 0;
      for (int i = 0; i < u.dim(); ++i) {
        for (int r = 0; r < output[i]; ++r, ++row) m(row, col) = u(i, j);
      }
    }
  }
  return m;
}

}  // namespace photent
