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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photent/bounds.hpp"
#include "photent/entangle.hpp"
#include "photent/optimize.hpp"
#include "photent/permanent.hpp"

namespace py = pybind11;
using namespace photent;

namespace {

OccupationVector occupation(const std::vector<int>& counts) { return OccupationVector(counts); }

Partition partition(const std::tuple<int, int, int>& p) {
  return {std::get<0>(p), std::get<1>(p), std::get<2>(p)};
}

py::dict outcome_dict(const HeraldedState& hs) {
  py::dict d;
  d["pattern"] = hs.pattern.counts();
  d["probability"] = hs.probability;
  d["possible"] = hs.possible;
  d["system_photons"] = hs.system_photons;
  d["sectors"] = hs.sectors;
  d["entanglement"] = hs.possible ? entanglement(hs) : 0.0;
  return d;
}

py::dict result_dict(const OptimizationResult& r) {
  py::dict d;
  d["best_value"] = r.best_value;
  d["best_restart"] = r.best_restart;
  d["best_unitary"] = r.best_restart ? py::cast(realize(r.best_params).matrix()) : py::none();
  d["best_theta"] = r.best_params.theta;
  d["per_restart_values"] = r.per_restart_values;
  d["iterations_used"] = r.iterations_used;
  d["failed"] = r.failed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_photent, m) {
  m.doc() = "Exact simulation of entanglement generated by linear-optical interferometers";

  m.def("dimension", &dimension, py::arg("modes"), py::arg("photons"));
  m.def(
      "fock_basis",
      [](int modes, int photons) {
        std::vector<std::vector<int>> out;
        for (const auto& v : FockBasis(modes, photons)) out.push_back(v.counts());
        return out;
      },
      py::arg("modes"), py::arg("photons"), "Occupation vectors in descending lexicographic order.");

  m.def(
      "haar_sample", [](int modes, std::uint64_t seed) { return haar_sample(modes, seed).matrix(); },
      py::arg("modes"), py::arg("seed"));
  m.def(
      "fixture", [](const std::string& name) { return fixture(name).matrix(); }, py::arg("name"),
      "Named beamsplitter networks: BS1, BS2, BS2xBS2_4mode, BS2xBS1_4mode, embed(NAME,M,i,j).");
  m.def(
      "realize", [](int dim, std::vector<double> theta) { return realize(UnitaryParams{dim, std::move(theta)}).matrix(); },
      py::arg("dim"), py::arg("theta"), "exp(iH) for the packed Hermitian generator theta.");
  m.def(
      "generator_of", [](const CMatrix& u) { return generator_of(Interferometer(u)).theta; }, py::arg("u"));

  m.def("permanent", &permanent, py::arg("a"));
  m.def(
      "amplitude",
      [](const CMatrix& u, const std::vector<int>& in, const std::vector<int>& out) {
        return amplitude(Interferometer(u), occupation(in), occupation(out));
      },
      py::arg("u"), py::arg("input"), py::arg("output"));
  m.def(
      "output_state",
      [](const CMatrix& u, const std::vector<int>& in) {
        const int modes = static_cast<int>(in.size());
        const OutputState s = full_output({Interferometer(u), occupation(in), {modes, 0, 0}});
        std::vector<std::vector<int>> basis;
        for (const auto& v : s.basis) basis.push_back(v.counts());
        return py::make_tuple(basis, s.amplitudes);
      },
      py::arg("u"), py::arg("input"), "(basis, amplitudes) over all output modes.");
  m.def(
      "herald",
      [](const CMatrix& u, const std::vector<int>& in, const std::tuple<int, int, int>& part) {
        py::list out;
        for (const auto& hs : herald_all({Interferometer(u), occupation(in), partition(part)})) {
          out.append(outcome_dict(hs));
        }
        return out;
      },
      py::arg("u"), py::arg("input"), py::arg("partition"),
      "Every herald pattern with its probability, sector coefficients and entanglement.");
  m.def(
      "average_entanglement",
      [](const CMatrix& u, const std::vector<int>& in, const std::tuple<int, int, int>& part) {
        return average_entanglement(ExperimentSetup{Interferometer(u), occupation(in), partition(part)});
      },
      py::arg("u"), py::arg("input"), py::arg("partition"));
  m.def(
      "entropy", [](const std::vector<double>& w) { return entropy(w); }, py::arg("weights"));

  m.def(
      "dimensionality_bound",
      [](int alice_modes, int system_photons) {
        const auto b = dimensionality_bound(alice_modes, system_photons);
        return py::make_tuple(b.omega, b.ebits);
      },
      py::arg("alice_modes"), py::arg("system_photons"));
  m.def("linearity_bound", &linearity_bound, py::arg("photons"));
  m.def("bunched_entropy", &bunched_entropy, py::arg("photons"), py::arg("p"));
  m.def("mean_constrained_entropy_bound", &mean_constrained_entropy_bound, py::arg("mean_photons"));
  m.def(
      "jensen_log3_bound", [](const std::vector<double>& q) { return jensen_log3_bound(q); }, py::arg("q"));

  m.def(
      "bell_cost",
      [](const CMatrix& u, const std::vector<int>& in, const std::tuple<int, int, int>& part, double exponent) {
        BellCostOptions opt;
        opt.exponent = exponent;
        return bell_cost(Interferometer(u), occupation(in), partition(part), opt);
      },
      py::arg("u"), py::arg("input"), py::arg("partition"), py::arg("exponent") = 10.0);
  m.def(
      "dual_rail_ent_yield",
      [](const CMatrix& u, const std::vector<int>& in, const std::tuple<int, int, int>& part) {
        return dual_rail_ent_yield(Interferometer(u), occupation(in), partition(part));
      },
      py::arg("u"), py::arg("input"), py::arg("partition"));
  m.def(
      "minimize",
      [](const std::string& objective, const std::vector<int>& in, const std::tuple<int, int, int>& part, int restarts,
         std::uint64_t seed, int max_iterations, double gradient_step, double convergence_tol, int workers) {
        OptimizationProblem p;
        p.objective = objective_from_string(objective);
        p.input = occupation(in);
        p.partition = partition(part);
        p.restarts = restarts;
        p.seed = seed;
        p.max_iterations = max_iterations;
        p.gradient_step = gradient_step;
        p.convergence_tol = convergence_tol;
        p.workers = workers;
        OptimizationResult r;
        {
          py::gil_scoped_release release;
          r = minimize(p);
        }
        return result_dict(r);
      },
      py::arg("objective"), py::arg("input"), py::arg("partition"), py::arg("restarts") = 10, py::arg("seed") = 1,
      py::arg("max_iterations") = 2000, py::arg("gradient_step") = 1e-6, py::arg("convergence_tol") = 1e-7,
      py::arg("workers") = 0,
      "Multi-restart search. objective is bell_cost, neg_avg_entanglement or dual_rail_ent_yield.");
}
