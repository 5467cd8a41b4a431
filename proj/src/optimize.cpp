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

#include "photent/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "photent/error.hpp"
#include "photent/parallel.hpp"

namespace photent {

std::vector<TargetState> default_bell_targets() {
  const double r = std::numbers::sqrt2 / 2.0;
  auto pair = [r](const char* x, const char* y, double sign) {
    return TargetState{{{OccupationVector::parse(x), Complex(r, 0.0)},
                        {OccupationVector::parse(y), Complex(sign * r, 0.0)}}};
  };
  return {pair("1010", "0101", 1.0), pair("1010", "0101", -1.0),
          pair("1001", "0110", 1.0), pair("1001", "0110", -1.0),
          pair("1100", "0011", 1.0), pair("1100", "0011", -1.0)};
}

BellCost::BellCost(OccupationVector input, Partition partition, BellCostOptions options)
    : plan_(std::move(input), partition), exponent_(options.exponent) {
  if (partition.alice != 2 || partition.bob != 2) {
    throw InvalidDomain("Bell cost needs two modes each for Alice and Bob");
  }
  if (options.targets.empty()) throw InvalidDomain("Bell cost needs at least one target state");
  int system_photons = -1;
  for (const auto& target : options.targets) {
    double norm = 0.0;
    for (const auto& [v, c] : target.terms) norm += std::norm(c);
    if (norm <= 0.0) throw InvalidDomain("target state has zero norm");
    std::vector<Term> terms;
    for (const auto& [v, c] : target.terms) {
      if (v.modes() != partition.system()) throw InvalidDomain("target term has wrong mode count");
      if (system_photons < 0) system_photons = v.total();
      if (v.total() != system_photons) throw InvalidDomain("targets must share one photon number");
      const SplitVector parts = split(v, Partition{partition.alice, partition.bob, 0});
      terms.push_back(Term{static_cast<std::size_t>(parts.alice.total()),
                           static_cast<Eigen::Index>(fock_rank(parts.alice.span())),
                           static_cast<Eigen::Index>(fock_rank(parts.bob.span())),
                           std::conj(c) / std::sqrt(norm)});
    }
    targets_.push_back(std::move(terms));
  }
  patterns_ = plan_.patterns_with_system_photons(system_photons);
}

double BellCost::operator()(const Interferometer& u) const {
  double total = 0.0;
  for (std::size_t idx : patterns_) {
    const HeraldedState hs = plan_.evaluate(u, idx);
    if (!hs.possible) continue;
    double score = 0.0;
    for (const auto& target : targets_) {
      Complex overlap{};
      for (const Term& t : target) overlap += t.conj_amplitude * hs.sectors[t.sector](t.row, t.col);
      score += std::pow(std::abs(overlap), exponent_);
    }
    total += hs.probability * score;
  }
  return -total;
}

double bell_cost(const Interferometer& u, const OccupationVector& input, const Partition& partition,
                 const BellCostOptions& options) {
  return BellCost(input, partition, options)(u);
}

double neg_avg_entanglement(const Interferometer& u, const OccupationVector& input,
                            const Partition& partition) {
  return -average_entanglement(ExperimentSetup{u, input, partition});
}

DualRailYield::DualRailYield(OccupationVector input, Partition partition)
    : plan_(std::move(input), partition) {
  if (partition.alice != 2 || partition.bob != 2 || partition.herald < 1) {
    throw InvalidDomain("dual-rail yield needs alice = bob = 2 and at least one herald mode");
  }
  patterns_ = plan_.patterns_with_system_photons(2);
}

double DualRailYield::operator()(const Interferometer& u) const {
  double total = 0.0;
  for (std::size_t idx : patterns_) {
    const HeraldedState hs = plan_.evaluate(u, idx);
    if (!hs.possible) continue;
    const DualRailProjection proj = dual_rail_project(hs);
    total += hs.probability * proj.in_subspace_weight * qubit_entanglement(proj.qubit_state);
  }
  return -total;
}

double dual_rail_ent_yield(const Interferometer& u, const OccupationVector& input,
                           const Partition& partition) {
  return DualRailYield(input, partition)(u);
}

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::bell_cost: return "bell_cost";
    case ObjectiveKind::neg_avg_entanglement: return "neg_avg_entanglement";
    case ObjectiveKind::dual_rail_ent_yield: return "dual_rail_ent_yield";
  }
  return "unknown";
}

ObjectiveKind objective_from_string(const std::string& name) {
  if (name == "bell_cost") return ObjectiveKind::bell_cost;
  if (name == "neg_avg_entanglement") return ObjectiveKind::neg_avg_entanglement;
  if (name == "dual_rail_ent_yield") return ObjectiveKind::dual_rail_ent_yield;
  throw InvalidDomain("unknown objective: " + name);
}

void OptimizationProblem::validate() const {
  if (restarts < 1) throw InvalidDomain("restarts must be >= 1");
  if (!(gradient_step > 0.0)) throw InvalidDomain("gradient_step must be positive");
  if (!(convergence_tol > 0.0)) throw InvalidDomain("convergence_tol must be positive");
  if (max_iterations < 0) throw InvalidDomain("max_iterations must be non-negative");
  if (partition.modes() != input.modes()) throw InvalidDomain("partition does not match the input");
}

Objective make_objective(const OptimizationProblem& problem) {
  switch (problem.objective) {
    case ObjectiveKind::bell_cost: {
      auto cost = std::make_shared<const BellCost>(problem.input, problem.partition, problem.bell);
      return [cost](const Interferometer& u) { return (*cost)(u); };
    }
    case ObjectiveKind::neg_avg_entanglement: {
      auto plan = std::make_shared<const HeraldPlan>(problem.input, problem.partition);
      return [plan](const Interferometer& u) { return -average_entanglement(*plan, u); };
    }
    case ObjectiveKind::dual_rail_ent_yield: {
      auto yield = std::make_shared<const DualRailYield>(problem.input, problem.partition);
      return [yield](const Interferometer& u) { return (*yield)(u); };
    }
  }
  throw InvalidDomain("unknown objective");
}

std::vector<double> numerical_gradient(const ScalarFunction& f, std::span<const double> x, double h) {
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

namespace {

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

BfgsResult bfgs_minimize(const ScalarFunction& f, std::vector<double> x0, const BfgsOptions& options) {
  using Vec = Eigen::VectorXd;
  const auto n = static_cast<Eigen::Index>(x0.size());
  BfgsResult result;
  auto eval = [&](const Vec& v) {
    ++result.evaluations;
    return f(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
  };
  auto grad = [&](const Vec& v) {
    result.evaluations += 2 * static_cast<int>(v.size());
    const auto g = numerical_gradient(f, std::span<const double>(v.data(), static_cast<std::size_t>(v.size())),
                                      options.gradient_step);
    return Vec(Eigen::Map<const Vec>(g.data(), n));
  };
  auto finish = [&](const Vec& v, double value, BfgsStatus status) {
    result.x.assign(v.data(), v.data() + v.size());
    result.value = value;
    result.status = status;
    return result;
  };

  Vec x = Eigen::Map<const Vec>(x0.data(), n);
  double fx = eval(x);
  if (!std::isfinite(fx)) return finish(x, fx, BfgsStatus::non_finite);
  Vec g = grad(x);
  if (!all_finite(g)) return finish(x, fx, BfgsStatus::non_finite);

  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  bool fresh = true;  // hinv is a multiple of the identity, never updated
  while (result.iterations < options.max_iterations) {
    if (g.lpNorm<Eigen::Infinity>() < options.convergence_tol) return finish(x, fx, BfgsStatus::converged);

    Vec p = -hinv * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      fresh = true;
      p = -g;
      slope = g.dot(p);
    }

    double alpha = 1.0;
    double f_trial = 0.0;
    Vec x_trial;
    bool accepted = false;
    for (int k = 0; k < options.max_backtracks; ++k) {
      x_trial = x + alpha * p;
      f_trial = eval(x_trial);
      if (std::isfinite(f_trial) && f_trial <= fx + options.armijo * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= options.backtrack;
    }
    if (!accepted) {
      if (fresh) return finish(x, fx, BfgsStatus::line_search_failed);
      hinv.setIdentity();
      fresh = true;
      continue;
    }

    const Vec g_trial = grad(x_trial);
    if (!all_finite(g_trial)) return finish(x, fx, BfgsStatus::non_finite);
    const Vec s = x_trial - x;
    const Vec y = g_trial - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm() && sy > 0.0) {
      if (fresh) {
        hinv *= sy / y.squaredNorm();
        fresh = false;
      }
      const double rho = 1.0 / sy;
      const Vec hy = hinv * y;
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      hinv += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
              rho * (hy * s.transpose() + s * hy.transpose());
    }
    x = x_trial;
    fx = f_trial;
    g = g_trial;
    ++result.iterations;
    if (options.record_trajectory) result.trajectory.push_back(fx);
  }
  return finish(x, fx, g.lpNorm<Eigen::Infinity>() < options.convergence_tol ? BfgsStatus::converged
                                                                            : BfgsStatus::max_iterations);
}

UnitaryParams restart_start(int modes, std::uint64_t seed, std::size_t index) {
  return generator_of(haar_sample(modes, derive_seed(seed, index)));
}

OptimizationResult minimize(const Objective& objective, int modes, int restarts, std::uint64_t seed,
                            const BfgsOptions& options, int workers) {
  if (restarts < 1) throw InvalidDomain("restarts must be >= 1");
  const auto count = static_cast<std::size_t>(restarts);
  std::vector<BfgsResult> runs(count);
  std::vector<char> failed(count, 0);

  parallel_for(count, workers, [&](std::size_t i) {
    const ScalarFunction f = [&](std::span<const double> theta) {
      UnitaryParams p{modes, std::vector<double>(theta.begin(), theta.end())};
      return objective(realize(p));
    };
    try {
      runs[i] = bfgs_minimize(f, restart_start(modes, seed, i).theta, options);
      failed[i] = runs[i].status == BfgsStatus::non_finite || !std::isfinite(runs[i].value);
    } catch (const std::exception&) {
      failed[i] = 1;
    }
  });

  OptimizationResult out;
  out.failed.assign(failed.begin(), failed.end());
  out.best_value = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < count; ++i) {
    const double v = failed[i] ? std::numeric_limits<double>::quiet_NaN() : runs[i].value;
    out.per_restart_values.push_back(v);
    out.iterations_used.push_back(runs[i].iterations);
    if (!failed[i] && (!out.best_restart || v < out.best_value)) {
      out.best_value = v;
      out.best_restart = i;
    }
  }
  if (out.best_restart) out.best_params = UnitaryParams{modes, runs[*out.best_restart].x};
  return out;
}

OptimizationResult minimize(const OptimizationProblem& problem) {
  problem.validate();
  BfgsOptions options;
  options.max_iterations = problem.max_iterations;
  options.gradient_step = problem.gradient_step;
  options.convergence_tol = problem.convergence_tol;
  return minimize(make_objective(problem), problem.input.modes(), problem.restarts, problem.seed, options,
                  problem.workers);
}

nlohmann::json to_json(const OptimizationResult& result, std::uint64_t seed,
                       const std::string& config_digest) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); };
  nlohmann::json values = nlohmann::json::array();
  for (double v : result.per_restart_values) values.push_back(finite_or_null(v));
  nlohmann::json params;
  if (result.best_restart) {
    params = {{"dim", result.best_params.dim},
              {"theta", result.best_params.theta},
              {"interferometer", to_json(realize(result.best_params))}};
  }
  return {{"best_value", finite_or_null(result.best_value)},
          {"best_restart", result.best_restart ? nlohmann::json(*result.best_restart) : nlohmann::json()},
          {"per_restart_values", std::move(values)},
          {"iterations_used", result.iterations_used},
          {"failed_restarts", std::count(result.failed.begin(), result.failed.end(), true)},
          {"params", std::move(params)},
          {"seed", seed},
          {"config_digest", config_digest}};
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins, double lo, double hi) {
  if (bins < 1) throw InvalidDomain("histogram needs at least one bin");
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  const double width = hi > lo ? (hi - lo) / bins : 1.0;
  for (int b = 0; b < bins; ++b) out[static_cast<std::size_t>(b)] = {lo + (b + 0.5) * width, 0};
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    auto b = static_cast<long>(std::floor((v - lo) / width));
    b = std::clamp(b, 0L, static_cast<long>(bins) - 1);
    ++out[static_cast<std::size_t>(b)].count;
  }
  return out;
}

}  // namespace photent
