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

#include "photent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "photent/bounds.hpp"
#include "photent/entangle.hpp"
#include "photent/optimize.hpp"
#include "photent/oracles.hpp"
#include "photent/parallel.hpp"
#include "photent/simulate.hpp"

namespace photent {

namespace {

using Rng = std::mt19937_64;

struct Check {
  bool passed = true;
  double worst = 0.0;
  std::string where;

  // Records |error| against tol.
  void error(double err, double tol, const std::string& label) {
    if (!(err <= tol)) {
      if (passed) where = label;
      passed = false;
    }
    if (std::isnan(err) || err > worst) worst = err;
  }
  void require(bool ok, const std::string& label) { error(ok ? 0.0 : 1.0, 0.0, label); }

  PropertyResult result(std::string name) const {
    std::ostringstream detail;
    detail << "max error " << worst;
    if (!passed) detail << " at " << where;
    return {std::move(name), passed, detail.str()};
  }
};

CMatrix random_matrix(int k, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix a(k, k);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = {g(rng), g(rng)};
  return a;
}

OccupationVector random_input(int modes, int photons, Rng& rng) {
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  std::uniform_int_distribution<int> pick(0, modes - 1);
  for (int k = 0; k < photons; ++k) ++counts[static_cast<std::size_t>(pick(rng))];
  return OccupationVector(counts);
}

double factorial_product(const OccupationVector& v) {
  double f = 1.0;
  for (int c : v.counts()) f *= static_cast<double>(factorial(c));
  return f;
}

Complex kernel_amplitude(const PermanentKernel& kernel, const Interferometer& u, const OccupationVector& in,
                         const OccupationVector& out) {
  return kernel(build_transition(u, in, out)) / std::sqrt(factorial_product(in) * factorial_product(out));
}

std::map<OccupationVector, Complex> as_map(const OutputState& out) {
  std::map<OccupationVector, Complex> m;
  for (std::size_t i = 0; i < out.basis.size(); ++i) m[out.basis[i]] = out.amplitudes[i];
  return m;
}

std::string label(const OccupationVector& in, int trial) {
  return "input " + in.to_string() + " trial " + std::to_string(trial);
}

// --- permanent ---------------------------------------------------------------

PropertyResult kernel_vs_naive(const PermanentKernel& kernel, Rng& rng) {
  Check c;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 7;
    const CMatrix a = random_matrix(k, rng);
    const Complex ref = oracle::naive_permanent(a);
    c.error(std::abs(kernel(a) - ref) / std::max(1.0, std::abs(ref)), 1e-10, "order " + std::to_string(k));
  }
  return c.result("permanent matches permutation sum");
}

PropertyResult kernel_invariances(const PermanentKernel& kernel, Rng& rng) {
  Check c;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 2 + trial % 8;
    const CMatrix a = random_matrix(k, rng);
    const Complex p = kernel(a);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CMatrix shuffled(k, k);
    for (int i = 0; i < k; ++i) shuffled.row(i) = a.row(perm[static_cast<std::size_t>(i)]);
    c.error(std::abs(kernel(shuffled) - p) / std::max(1.0, std::abs(p)), 1e-10, "row permutation");
    c.error(std::abs(kernel(a.transpose()) - p) / std::max(1.0, std::abs(p)), 1e-10, "transpose");
    Complex scale{1.0, 0.0};
    CMatrix scaled = a;
    for (int i = 0; i < k; ++i) {
      const Complex d{g(rng), g(rng)};
      scaled.row(i) *= d;
      scale *= d;
    }
    c.error(std::abs(kernel(scaled) - scale * p) / std::max(1.0, std::abs(scale * p)), 1e-10, "row scaling");
  }
  c.error(std::abs(kernel(CMatrix::Identity(5, 5)) - 1.0), 1e-14, "identity");
  return c.result("permanent invariances");
}

// --- simulate ----------------------------------------------------------------

PropertyResult hong_ou_mandel(const PermanentKernel& kernel) {
  Check c;
  const Interferometer bs = fixture(FixtureId::BS1);
  c.error(std::abs(kernel_amplitude(kernel, bs, {1, 1}, {1, 1})), 1e-12, "coincidence");
  c.error(std::abs(std::norm(kernel_amplitude(kernel, bs, {1, 1}, {2, 0})) - 0.5), 1e-12, "bunching");
  return c.result("Hong-Ou-Mandel dip");
}

PropertyResult output_norm(const PermanentKernel& kernel, Rng& rng) {
  Check c;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 1 + trial % 4;
    const Interferometer u = haar_sample(m, rng());
    const OccupationVector in = random_input(m, n, rng);
    double total = 0.0;
    for (const auto& out : FockBasis(m, n)) total += std::norm(kernel_amplitude(kernel, u, in, out));
    c.error(std::abs(total - 1.0), 1e-10, label(in, trial));
  }
  return c.result("output state is normalized");
}

PropertyResult mean_photon_per_mode(const PermanentKernel& kernel, Rng& rng) {
  Check c;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 1 + trial % 4;
    const Interferometer u = haar_sample(m, rng());
    const OccupationVector in = random_input(m, n, rng);
    std::vector<double> mean(static_cast<std::size_t>(m), 0.0);
    for (const auto& out : FockBasis(m, n)) {
      const double p = std::norm(kernel_amplitude(kernel, u, in, out));
      for (int j = 0; j < m; ++j) mean[static_cast<std::size_t>(j)] += p * out[j];
    }
    for (int j = 0; j < m; ++j) {
      double expected = 0.0;
      for (int k = 0; k < m; ++k) expected += std::norm(u(j, k)) * in[k];
      c.error(std::abs(mean[static_cast<std::size_t>(j)] - expected), 1e-10, label(in, trial));
    }
  }
  return c.result("mean photon number per output mode");
}

PropertyResult creation_operator_expansion(const PermanentKernel& kernel, Rng& rng) {
  Check c;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 3;
    const int n = 1 + trial % 4;
    const Interferometer u = haar_sample(m, rng());
    const OccupationVector in = random_input(m, n, rng);
    const auto expected = oracle::expand_creation_operators(u.matrix(), in);
    for (const auto& out : FockBasis(m, n)) {
      const auto it = expected.find(out);
      const Complex ref = it == expected.end() ? Complex{} : it->second;
      c.error(std::abs(kernel_amplitude(kernel, u, in, out) - ref), 1e-10, label(in, trial));
    }
  }
  return c.result("amplitudes match creation-operator expansion");
}

PropertyResult herald_completeness(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 3 + trial % 4;
    const Partition part{1, 1, m - 2};
    const OccupationVector in = random_input(m, 1 + trial % 4, rng);
    double total = 0.0;
    for (const auto& hs : herald_all({haar_sample(m, rng()), in, part})) total += hs.probability;
    c.error(std::abs(total - 1.0), 1e-10, label(in, trial));
  }
  return c.result("herald probabilities sum to one");
}

// --- fock / unitary ----------------------------------------------------------

PropertyResult fock_ranking() {
  Check c;
  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const FockBasis basis(m, n);
      c.require(basis.size() == dimension(m, n), "dimension " + std::to_string(m) + "," + std::to_string(n));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        c.require(basis.index(basis[i]) == i, basis[i].to_string());
        if (i > 0) c.require(basis[i - 1] > basis[i], basis[i].to_string());
      }
    }
  }
  return c.result("Fock basis ordering and ranking");
}

PropertyResult haar_unitarity(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 30; ++trial) {
    const Interferometer u = haar_sample(1 + trial % 8, rng());
    c.error(u.unitarity_error(), 1e-12, "trial " + std::to_string(trial));
  }
  return c.result("Haar samples are unitary");
}

PropertyResult generator_round_trip(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 30; ++trial) {
    const Interferometer u = haar_sample(2 + trial % 6, rng());
    const Interferometer back = realize(generator_of(u));
    c.error((back.matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-10, "trial " + std::to_string(trial));
  }
  return c.result("generator logarithm round trip");
}

// --- entangle ----------------------------------------------------------------

PropertyResult entropy_rank_bound(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    for (const auto& hs : herald_all({haar_sample(5, rng()), {1, 1, 1, 0, 0}, {2, 2, 1}})) {
      if (!hs.possible) continue;
      const SchmidtSpectrum sp = schmidt_spectrum(hs);
      c.error(std::max(0.0, entropy(sp) - std::log2(std::max(1, sp.rank()))), 1e-12, hs.pattern.to_string());
    }
  }
  return c.result("entropy at most log of Schmidt rank");
}

PropertyResult reduced_state_agreement(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 3 + trial % 3;
    const int ma = 1 + trial % (m - 1);
    const ExperimentSetup s{haar_sample(m, rng()), OccupationVector::unbunched(m, m - 1), {ma, m - ma, 0}};
    const double svd = entanglement(herald_all(s)[0]);
    const double dense = oracle::shannon_bits(oracle::reduced_state_eigenvalues(as_map(full_output(s)), ma));
    c.error(std::abs(svd - dense), 1e-10, "trial " + std::to_string(trial));
  }
  return c.result("sector SVD matches dense reduced state");
}

PropertyResult measurement_monotone(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 20; ++trial) {
    const ExperimentSetup s{haar_sample(5, rng()), {1, 1, 1, 1, 0}, {1, 2, 2}};
    c.error(std::max(0.0, average_entanglement(s) - pre_measurement_entanglement(s)), 1e-9,
            "trial " + std::to_string(trial));
  }
  return c.result("heralding does not increase entanglement on average");
}

// --- bounds ------------------------------------------------------------------

PropertyResult dimensionality_formula() {
  Check c;
  for (int ma = 1; ma <= 5; ++ma) {
    for (int ns = 0; ns <= 8; ++ns) {
      c.require(dimensionality_bound(ma, ns).omega == oracle::schmidt_capacity(ma, ma, ns),
                std::to_string(ma) + "," + std::to_string(ns));
    }
  }
  return c.result("dimensionality bound equals sector capacity");
}

PropertyResult single_mode_bounds(Rng& rng) {
  Check c;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + trial % 3;
    const ExperimentSetup free{haar_sample(m, rng()), OccupationVector::unbunched(m, m - 1), {1, m - 1, 0}};
    c.error(std::max(0.0, average_entanglement(free) - 2.0), kBoundSlack, "two-ebit trial " + std::to_string(trial));
    const ExperimentSetup heralded{haar_sample(m, rng()), OccupationVector::unbunched(m, m), {1, 1, m - 2}};
    c.error(std::max(0.0, average_entanglement(heralded) - std::log2(3.0)), kBoundSlack,
            "log3 trial " + std::to_string(trial));
  }
  return c.result("single-mode entanglement bounds");
}

PropertyResult bound_formulas(Rng& rng) {
  Check c;
  double last = -1.0;
  for (int i = 1; i <= 50; ++i) {
    const double v = mean_constrained_entropy_bound(i / 10.0);
    c.require(v > last, "mean bound at " + std::to_string(i / 10.0));
    last = v;
  }
  for (int n : {1, 2, 5, 12}) {
    int best = 0;
    for (int k = 1; k <= 99; ++k) {
      if (bunched_entropy(n, k / 100.0) > bunched_entropy(n, best / 100.0)) best = k;
    }
    c.require(best == 50, "binomial maximum n=" + std::to_string(n));
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> q(5);
    double total = 0.0;
    for (auto& x : q) total += (x = u(rng));
    double mean = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) mean += static_cast<double>(j) * (q[j] /= total);
    if (mean <= 1.0) continue;
    for (auto& x : q) x /= mean;
    q[0] += 1.0 - 1.0 / mean;
    c.error(std::max(0.0, jensen_log3_bound(q) - std::log2(3.0)), 1e-12, "jensen trial " + std::to_string(trial));
  }
  return c.result("closed-form bound shapes");
}

// --- optimize ----------------------------------------------------------------

PropertyResult descent_monotone() {
  Check c;
  const ScalarFunction f = [](std::span<const double> theta) {
    return neg_avg_entanglement(realize(UnitaryParams{3, {theta.begin(), theta.end()}}), {1, 1, 1}, {1, 1, 1});
  };
  BfgsOptions opt;
  opt.record_trajectory = true;
  for (std::size_t r = 0; r < 3; ++r) {
    const BfgsResult res = bfgs_minimize(f, restart_start(3, 5, r).theta, opt);
    for (std::size_t i = 1; i < res.trajectory.size(); ++i) {
      c.error(std::max(0.0, res.trajectory[i] - res.trajectory[i - 1]), 0.0, "restart " + std::to_string(r));
    }
  }
  return c.result("quasi-Newton descent is monotone");
}

PropertyResult gradient_agreement() {
  Check c;
  const OccupationVector four{1, 1, 1, 1, 0, 0, 0, 0};
  const ScalarFunction f = [&](std::span<const double> theta) {
    return bell_cost(realize(UnitaryParams{8, {theta.begin(), theta.end()}}), four, {2, 2, 4});
  };
  for (std::size_t point = 0; point < 5; ++point) {
    const std::vector<double> x = restart_start(8, 11, point).theta;
    const auto coarse = numerical_gradient(f, x, 1e-6);
    const auto fine = numerical_gradient(f, x, 1e-7);
    double diff = 0.0, scale = 1e-6;
    for (std::size_t i = 0; i < x.size(); ++i) {
      diff = std::max(diff, std::abs(coarse[i] - fine[i]));
      scale = std::max(scale, std::abs(fine[i]));
    }
    c.error(diff / scale, 1e-3, "point " + std::to_string(point));
  }
  return c.result("central differences stable under step refinement");
}

PropertyResult herald_relabelling(Rng& rng) {
  Check c;
  const OccupationVector four{1, 1, 1, 1, 0, 0, 0, 0};
  for (int trial = 0; trial < 5; ++trial) {
    const Interferometer u = haar_sample(8, rng());
    CMatrix m = u.matrix();
    m.row(4).swap(m.row(7));
    m.row(5).swap(m.row(6));
    const double a = bell_cost(u, four, {2, 2, 4});
    const double b = bell_cost(Interferometer(m), four, {2, 2, 4});
    c.error(std::abs(a - b), 1e-10, "trial " + std::to_string(trial));
  }
  return c.result("objectives ignore herald relabelling");
}

PropertyResult restart_determinism() {
  Check c;
  OptimizationProblem p;
  p.input = {1, 1, 1};
  p.partition = {1, 1, 1};
  p.restarts = 4;
  p.seed = 3;
  p.workers = 1;
  const OptimizationResult serial = minimize(p);
  p.workers = 3;
  const OptimizationResult parallel = minimize(p);
  c.require(serial.per_restart_values == parallel.per_restart_values, "per-restart values");
  c.require(serial.best_params.theta == parallel.best_params.theta, "best parameters");
  return c.result("restarts independent of worker count");
}

}  // namespace

PermanentKernel default_permanent_kernel() {
  return [](const AmplitudeMatrix& a) { return permanent(a); };
}

PermanentKernel mutated_permanent_kernel() {
  return [](const AmplitudeMatrix& a) { return a.rows() % 2 == 1 ? -permanent(a) : permanent(a); };
}

std::vector<PropertyResult> run_property_suite(const PermanentKernel& kernel, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;
  out.push_back(kernel_vs_naive(kernel, rng));
  out.push_back(kernel_invariances(kernel, rng));
  out.push_back(hong_ou_mandel(kernel));
  out.push_back(output_norm(kernel, rng));
  out.push_back(mean_photon_per_mode(kernel, rng));
  out.push_back(creation_operator_expansion(kernel, rng));
  out.push_back(herald_completeness(rng));
  out.push_back(fock_ranking());
  out.push_back(haar_unitarity(rng));
  out.push_back(generator_round_trip(rng));
  out.push_back(entropy_rank_bound(rng));
  out.push_back(reduced_state_agreement(rng));
  out.push_back(measurement_monotone(rng));
  out.push_back(dimensionality_formula());
  out.push_back(single_mode_bounds(rng));
  out.push_back(bound_formulas(rng));
  out.push_back(descent_monotone());
  out.push_back(gradient_agreement());
  out.push_back(herald_relabelling(rng));
  out.push_back(restart_determinism());
  return out;
}

}  // namespace photent
