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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace photent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTolerance = 1e-10;

/// M x M unitary mode transformation. Output modes index rows, input modes
/// index columns: a_k^dagger -> sum_j U(j, k) a_j^dagger.
class Interferometer {
 public:
  /// Validates ||U^dagger U - I||_max <= kUnitarityTolerance.
  explicit Interferometer(CMatrix u);

  static Interferometer identity(int modes);

  int dim() const { return static_cast<int>(u_.rows()); }
  const CMatrix& matrix() const { return u_; }
  Complex operator()(int row, int col) const { return u_(row, col); }

  /// max |(U^dagger U - I)_{jk}|
  double unitarity_error() const;

 private:
  CMatrix u_;
};

double unitarity_error(const CMatrix& u);

/// Haar-random unitary from a complex Gaussian matrix, QR-orthonormalized
/// with the phase convention that makes diag(R) real positive.
Interferometer haar_sample(int modes, std::uint64_t seed);

/// Packed Hermitian generator: first `dim` entries are the diagonal, then
/// (re, im) pairs of the strict upper triangle in row-major order.
struct UnitaryParams {
  int dim = 0;
  std::vector<double> theta;

  static UnitaryParams zeros(int dim);
  static std::size_t count(int dim) { return static_cast<std::size_t>(dim) * dim; }
};

CMatrix hermitian_generator(const UnitaryParams& p);
UnitaryParams pack_generator(const CMatrix& hermitian);

/// U = exp(i H(p)).
Interferometer realize(const UnitaryParams& p);

/// Hermitian H with exp(iH) = U and eigenphases in (-pi, pi].
UnitaryParams generator_of(const Interferometer& u);

/// Named interferometers. BS2 takes an optional mixing angle; the default is
/// theta = arccos(1/sqrt(3)) / 2.
enum class FixtureId { BS1, BS2, BS2xBS2_4mode, BS2xBS1_4mode };

double bs2_angle();

Interferometer fixture(FixtureId id, std::optional<double> theta = std::nullopt);

/// Places a 2x2 block on modes (first, second), identity elsewhere. Zero-based modes.
Interferometer embed(const Interferometer& block, int modes, int first, int second);

/// Parses "BS1", "BS2", "BS2(0.3)", "BS2xBS2_4mode", "BS2xBS1_4mode" or
/// "embed(NAME,M,i,j)" with zero-based i, j. Throws InvalidFixture.
Interferometer fixture(const std::string& name);

nlohmann::json to_json(const Interferometer& u);
Interferometer interferometer_from_json(const nlohmann::json& j);

}  // namespace photent
