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

#include "photent/entangle.hpp"

#include <algorithm>
#include <cmath>

#include "photent/error.hpp"

namespace photent {

namespace {

constexpr double kWeightFloor = 1e-15;

// Neumaier summation; outcome sums reach 10^4 terms and more.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

std::vector<double> SchmidtSpectrum::weights() const {
  std::vector<double> flat;
  for (const auto& s : sectors) flat.insert(flat.end(), s.begin(), s.end());
  return flat;
}

int SchmidtSpectrum::rank(double threshold) const {
  int r = 0;
  for (const auto& s : sectors) {
    r += static_cast<int>(std::count_if(s.begin(), s.end(), [&](double w) { return w > threshold; }));
  }
  return r;
}

SchmidtSpectrum schmidt_spectrum(const HeraldedState& hs) {
  if (!hs.possible) throw InvalidDomain("Schmidt spectrum of an impossible outcome");
  SchmidtSpectrum out;
  out.sectors.reserve(hs.sectors.size());
  for (const CMatrix& block : hs.sectors) {
    std::vector<double> w;
    if (block.size() > 0) {
      if (block.rows() == 1 || block.cols() == 1) {
        w.push_back(block.squaredNorm());
      } else {
        Eigen::JacobiSVD<CMatrix> svd(block);
        for (double s : svd.singularValues()) w.push_back(s * s);
      }
    }
    out.sectors.push_back(std::move(w));
  }
  return out;
}

double entropy(std::span<const double> weights) {
  CompensatedSum s;
  for (double w : weights) {
    if (w < kWeightFloor) continue;
    s.add(-w * std::log2(w));
  }
  return s.value();
}

double entropy(const SchmidtSpectrum& spectrum) {
  const std::vector<double> w = spectrum.weights();
  return entropy(w);
}

double entanglement(const HeraldedState& hs) { return entropy(schmidt_spectrum(hs)); }

double average_entanglement(std::span<const HeraldedState> outcomes) {
  CompensatedSum s;
  for (const auto& hs : outcomes) {
    if (!hs.possible) continue;
    s.add(hs.probability * entanglement(hs));
  }
  return s.value();
}

double average_entanglement(const HeraldPlan& plan, const Interferometer& u) {
  CompensatedSum s;
  for (std::size_t i = 0; i < plan.patterns().size(); ++i) {
    const HeraldedState hs = plan.evaluate(u, i);
    if (!hs.possible) continue;
    s.add(hs.probability * entanglement(hs));
  }
  return s.value();
}

double average_entanglement(const ExperimentSetup& setup) {
  setup.validate();
  return average_entanglement(HeraldPlan(setup.input, setup.partition), setup.u);
}

double pre_measurement_entanglement(const ExperimentSetup& setup) {
  setup.validate();
  const Partition whole{setup.partition.alice, setup.partition.bob + setup.partition.herald, 0};
  return average_entanglement(HeraldPlan(setup.input, whole), setup.u);
}

DualRailProjection dual_rail_project(const HeraldedState& hs) {
  if (hs.partition.alice != 2 || hs.partition.bob != 2) {
    throw InvalidDomain("dual-rail projection needs two modes each for Alice and Bob");
  }
  DualRailProjection out;
  if (!hs.possible || hs.system_photons != 2) return out;
  // Sector n_A = 1 is the 2x2 block over Alice {10, 01} x Bob {10, 01}.
  const CMatrix& block = hs.sectors[1];
  out.qubit_state = {block(0, 0), block(0, 1), block(1, 0), block(1, 1)};
  const double weight = block.squaredNorm();
  out.in_subspace_weight = weight;
  if (weight < kImpossibleProbability) {
    out.qubit_state = {};
    return out;
  }
  const double scale = 1.0 / std::sqrt(weight);
  for (auto& c : out.qubit_state) c *= scale;
  return out;
}

double qubit_entanglement(const std::array<Complex, 4>& state) {
  Eigen::Matrix2cd m;
  m << state[0], state[1], state[2], state[3];
  if (m.squaredNorm() < kImpossibleProbability) return 0.0;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const auto& s = svd.singularValues();
  const std::array<double, 2> w{s(0) * s(0), s(1) * s(1)};
  return entropy(w);
}

}  // namespace photent
