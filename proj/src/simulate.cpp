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

#include "photent/simulate.hpp"

#include <array>
#include <cmath>

#include "photent/error.hpp"
#include "photent/permanent.hpp"

namespace photent {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

double factorial_product(std::span<const int> counts) {
  double p = 1.0;
  for (int c : counts) p *= static_cast<double>(factorial(c));
  return p;
}

std::size_t sector_dimension(int modes, int photons) {
  if (modes == 0) return photons == 0 ? 1 : 0;
  return dimension(modes, photons);
}

std::vector<int> expand_modes(std::span<const int> counts, int offset = 0) {
  std::vector<int> modes;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    for (int r = 0; r < counts[j]; ++r) modes.push_back(static_cast<int>(j) + offset);
  }
  return modes;
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidDomain("factorial argument outside [0, 20]");
  return kFactorials[static_cast<std::size_t>(n)];
}

void ExperimentSetup::validate() const {
  const int m = u.dim();
  if (input.modes() != m) throw InvalidDomain("input occupation must cover every mode");
  if (input.total() < 1) throw InvalidDomain("input must carry at least one photon");
  if (input.total() > kMaxPermanentOrder) throw CapacityError("more than 20 photons");
  if (partition.alice < 1 || partition.bob < 0 || partition.herald < 0) {
    throw InvalidDomain("partition needs alice >= 1 and non-negative bob, herald");
  }
  if (partition.modes() != m) throw InvalidDomain("partition does not sum to the mode count");
}

Complex amplitude(const Interferometer& u, const OccupationVector& input,
                  const OccupationVector& output) {
  const AmplitudeMatrix m = build_transition(u, input, output);
  const double norm = std::sqrt(factorial_product(input.span()) * factorial_product(output.span()));
  return permanent(m) / norm;
}

OutputState full_output(const ExperimentSetup& setup) {
  setup.validate();
  const int m = setup.u.dim();
  const int n = setup.photons();
  OutputState out{enumerate(m, n), {}};
  out.amplitudes.reserve(out.basis.size());
  const std::vector<int> cols = expand_modes(setup.input.span());
  const double in_fact = factorial_product(setup.input.span());
  std::array<Complex, kMaxPermanentOrder * kMaxPermanentOrder> buf{};
  for (const auto& v : out.basis) {
    const std::vector<int> rows = expand_modes(v.span());
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) buf[r + c * n] = setup.u(rows[r], cols[c]);
    }
    const double norm = std::sqrt(in_fact * factorial_product(v.span()));
    out.amplitudes.push_back(permanent_colmajor(buf, n) / norm);
  }
  return out;
}

Complex HeraldedState::coefficient(const OccupationVector& a, const OccupationVector& b) const {
  if (!possible) throw InvalidDomain("heralded outcome has zero probability");
  if (a.modes() != partition.alice || b.modes() != partition.bob ||
      a.total() + b.total() != system_photons) {
    throw InvalidDomain("(" + a.to_string() + ", " + b.to_string() + ") is outside the sector");
  }
  return sectors[static_cast<std::size_t>(a.total())](
      static_cast<Eigen::Index>(fock_rank(a.span())), static_cast<Eigen::Index>(fock_rank(b.span())));
}

Complex HeraldedState::unnormalized(const OccupationVector& a, const OccupationVector& b) const {
  return coefficient(a, b) * std::sqrt(probability);
}

Complex particle_coefficient(const HeraldedState& hs, const OccupationVector& a,
                             const OccupationVector& b) {
  const Complex c = hs.unnormalized(a, b);
  return c / std::sqrt(factorial_product(a.span()) * factorial_product(b.span()));
}

HeraldPlan::HeraldPlan(OccupationVector input, Partition partition)
    : input_(std::move(input)), partition_(partition) {
  if (partition_.alice < 1 || partition_.bob < 0 || partition_.herald < 0 ||
      partition_.modes() != input_.modes()) {
    throw InvalidDomain("partition does not match the input mode count");
  }
  const int n = input_.total();
  if (n < 1 || n > kMaxPermanentOrder) throw InvalidDomain("photon number must be in [1, 20]");
  input_modes_ = expand_modes(input_.span());
  input_factorials_ = factorial_product(input_.span());

  if (partition_.herald == 0) {
    patterns_.emplace_back();
  } else {
    for (int nh = 0; nh <= n; ++nh) {
      for (const auto& h : enumerate(partition_.herald, nh)) patterns_.push_back(h);
    }
  }

  layouts_.resize(static_cast<std::size_t>(n) + 1);
  for (int ns = 0; ns <= n; ++ns) {
    SystemLayout& layout = layouts_[static_cast<std::size_t>(ns)];
    for (int na = 0; na <= ns; ++na) {
      const int nb = ns - na;
      const auto rows = static_cast<int>(sector_dimension(partition_.alice, na));
      const auto cols = static_cast<int>(sector_dimension(partition_.bob, nb));
      layout.sector_shapes.emplace_back(rows, cols);
      if (rows == 0 || cols == 0) continue;
      const FockBasis alice(partition_.alice, na);
      const FockBasis bob(partition_.bob, nb);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const OccupationVector sys = concat(alice[static_cast<std::size_t>(r)],
                                              bob[static_cast<std::size_t>(c)]);
          layout.states.push_back(
              SystemState{na, r, c, expand_modes(sys.span()), factorial_product(sys.span())});
        }
      }
    }
  }
}

std::vector<std::size_t> HeraldPlan::patterns_with_system_photons(int system_photons) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (photons() - patterns_[i].total() == system_photons) out.push_back(i);
  }
  return out;
}

HeraldedState HeraldPlan::evaluate(const Interferometer& u, std::size_t pattern_index) const {
  if (u.dim() != input_.modes()) throw InvalidDomain("interferometer size does not match the plan");
  const OccupationVector& h = patterns_.at(pattern_index);
  const int n = photons();
  const int ns = n - h.total();
  const SystemLayout& layout = layouts_[static_cast<std::size_t>(ns)];

  HeraldedState hs;
  hs.pattern = h;
  hs.partition = partition_;
  hs.system_photons = ns;
  hs.sectors.reserve(layout.sector_shapes.size());
  for (const auto& [rows, cols] : layout.sector_shapes) hs.sectors.emplace_back(CMatrix::Zero(rows, cols));

  std::array<Complex, kMaxPermanentOrder * kMaxPermanentOrder> buf{};
  const std::vector<int> herald_rows = expand_modes(h.span(), partition_.system());
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < static_cast<int>(herald_rows.size()); ++r) {
      buf[(ns + r) + c * n] = u(herald_rows[r], input_modes_[c]);
    }
  }
  const double fixed_factorials = input_factorials_ * factorial_product(h.span());

  double total = 0.0;
  for (const SystemState& s : layout.states) {
    for (int c = 0; c < n; ++c) {
      const int col = input_modes_[c];
      for (int r = 0; r < ns; ++r) buf[r + c * n] = u(s.modes[r], col);
    }
    const Complex amp = permanent_colmajor(buf, n) / std::sqrt(fixed_factorials * s.factorial_product);
    hs.sectors[static_cast<std::size_t>(s.sector)](s.row, s.col) = amp;
    total += std::norm(amp);
  }

  hs.probability = total;
  hs.possible = total >= kImpossibleProbability;
  if (hs.possible) {
    const double scale = 1.0 / std::sqrt(total);
    for (auto& sector : hs.sectors) sector *= scale;
  } else {
    hs.sectors.clear();
  }
  return hs;
}

std::vector<HeraldedState> HeraldPlan::evaluate_all(const Interferometer& u) const {
  std::vector<HeraldedState> out;
  out.reserve(patterns_.size());
  for (std::size_t i = 0; i < patterns_.size(); ++i) out.push_back(evaluate(u, i));
  return out;
}

std::vector<HeraldedState> herald_all(const ExperimentSetup& setup) {
  setup.validate();
  return HeraldPlan(setup.input, setup.partition).evaluate_all(setup.u);
}

HeraldedState herald(const ExperimentSetup& setup, const OccupationVector& pattern) {
  setup.validate();
  const HeraldPlan plan(setup.input, setup.partition);
  const auto& patterns = plan.patterns();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i] == pattern) return plan.evaluate(setup.u, i);
  }
  throw InvalidDomain("pattern " + pattern.to_string() + " is not a valid herald outcome");
}

nlohmann::json to_json(const HeraldedState& hs) {
  nlohmann::json amps = nlohmann::json::array();
  if (hs.possible) {
    for (int na = 0; na <= hs.system_photons; ++na) {
      const CMatrix& sector = hs.sectors[static_cast<std::size_t>(na)];
      if (sector.size() == 0) continue;
      const FockBasis alice(hs.partition.alice, na);
      const FockBasis bob(hs.partition.bob, hs.system_photons - na);
      for (Eigen::Index r = 0; r < sector.rows(); ++r) {
        for (Eigen::Index c = 0; c < sector.cols(); ++c) {
          amps.push_back({{"a", alice[static_cast<std::size_t>(r)].to_string()},
                          {"b", bob[static_cast<std::size_t>(c)].to_string()},
                          {"re", sector(r, c).real()},
                          {"im", sector(r, c).imag()}});
        }
      }
    }
  }
  return {{"pattern", hs.pattern.to_string()}, {"prob", hs.probability}, {"amplitudes", std::move(amps)}};
}

}  // namespace photent
