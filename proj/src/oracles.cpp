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

#include "photent/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "photent/error.hpp"

namespace photent::oracle {

Complex naive_permanent(const CMatrix& a) {
  const int k = static_cast<int>(a.rows());
  if (a.cols() != k) throw InvalidDomain("naive_permanent needs a square matrix");
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total{};
  do {
    Complex term(1.0, 0.0);
    for (int i = 0; i < k; ++i) term *= a(i, sigma[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::map<OccupationVector, Complex> expand_creation_operators(const CMatrix& u,
                                                              const OccupationVector& input) {
  const int m = static_cast<int>(u.rows());
  // Monomials prod_j (a_j^dagger)^{e_j} keyed by exponent vector.
  std::map<std::vector<int>, Complex> poly{{std::vector<int>(static_cast<std::size_t>(m), 0), {1.0, 0.0}}};
  double input_norm = 1.0;
  for (int k = 0; k < m; ++k) {
    for (int rep = 0; rep < input[k]; ++rep) {
      input_norm *= rep + 1;
      std::map<std::vector<int>, Complex> next;
      for (const auto& [mono, c] : poly) {
        for (int j = 0; j < m; ++j) {
          std::vector<int> e = mono;
          ++e[static_cast<std::size_t>(j)];
          next[e] += c * u(j, k);
        }
      }
      poly = std::move(next);
    }
  }
  std::map<OccupationVector, Complex> out;
  for (const auto& [mono, c] : poly) {
    // (a^dagger)^e |0> = sqrt(e!) |e>
    double norm = 1.0;
    for (int e : mono) {
      for (int f = 2; f <= e; ++f) norm *= f;
    }
    out[OccupationVector(mono)] = c * std::sqrt(norm) / std::sqrt(input_norm);
  }
  return out;
}

std::uint64_t schmidt_capacity(int alice_modes, int bob_modes, int system_photons) {
  std::uint64_t total = 0;
  for (int na = 0; na <= system_photons; ++na) {
    total += std::min(dimension(alice_modes, na), dimension(bob_modes, system_photons - na));
  }
  return total;
}

std::vector<double> reduced_state_eigenvalues(const std::map<OccupationVector, Complex>& state,
                                              int alice_modes) {
  // Index Alice and rest configurations as they appear.
  std::map<std::vector<int>, int> alice_index;
  std::map<std::vector<int>, int> rest_index;
  for (const auto& [v, c] : state) {
    const auto& counts = v.counts();
    alice_index.try_emplace(std::vector<int>(counts.begin(), counts.begin() + alice_modes),
                            static_cast<int>(alice_index.size()));
    rest_index.try_emplace(std::vector<int>(counts.begin() + alice_modes, counts.end()),
                           static_cast<int>(rest_index.size()));
  }
  CMatrix psi = CMatrix::Zero(static_cast<Eigen::Index>(alice_index.size()),
                              static_cast<Eigen::Index>(rest_index.size()));
  for (const auto& [v, c] : state) {
    const auto& counts = v.counts();
    const int r = alice_index.at(std::vector<int>(counts.begin(), counts.begin() + alice_modes));
    const int col = rest_index.at(std::vector<int>(counts.begin() + alice_modes, counts.end()));
    psi(r, col) += c;
  }
  const double norm = psi.squaredNorm();
  if (norm <= 0.0) throw InvalidDomain("zero state");
  const CMatrix rho = psi * psi.adjoint() / norm;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho, Eigen::EigenvaluesOnly);
  std::vector<double> out(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  return out;
}

double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 1e-14) h -= x * std::log(x) / std::log(2.0);
  }
  return h;
}

}  // namespace photent::oracle
