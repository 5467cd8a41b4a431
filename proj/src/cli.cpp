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

#include "photent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "photent/bounds.hpp"
#include "photent/entangle.hpp"
#include "photent/error.hpp"
#include "photent/optimize.hpp"
#include "photent/parallel.hpp"
#include "photent/verify.hpp"

namespace photent::cli {

namespace {

using nlohmann::json;

enum class Kind { integer, seed, real, boolean, text, int_list, partition };

struct Field {
  std::string name;
  Kind kind;
  json fallback;
  double lo = 0.0;
  double hi = 0.0;
};

// Fields that never change results.
const std::vector<std::string> kOutputOnly = {"out", "timing"};

std::vector<Field> optimizer_fields(int restarts) {
  return {{"restarts", Kind::integer, restarts, 1, 1e7},
          {"seed", Kind::seed, 1},
          {"max_iterations", Kind::integer, 2000, 1, 1e7},
          {"gradient_step", Kind::real, 1e-6, 1e-12, 1e-1},
          {"convergence_tol", Kind::real, 1e-7, 1e-15, 1.0}};
}

const std::map<std::string, std::vector<Field>>& schemas() {
  static const std::map<std::string, std::vector<Field>> table = [] {
    std::map<std::string, std::vector<Field>> t;
    t["haar-sweep"] = {{"modes", Kind::integer, 8, 1, 39},
                       {"photons", Kind::integer, 4, 0, 20},
                       {"partition", Kind::partition, json::array({2, 2, 4})},
                       {"samples", Kind::integer, 1000, 1, 1e9},
                       {"seed", Kind::seed, 1},
                       {"bins", Kind::integer, 100, 1, 1e6},
                       {"timing", Kind::boolean, false},
                       {"out", Kind::text, "haar_sweep.csv"}};
    t["bell-search"] = {{"modes", Kind::integer, 8, 4, 39},
                        {"photons", Kind::integer, 4, 1, 20},
                        {"partition", Kind::partition, json::array({2, 2, 4})},
                        {"exponent", Kind::real, 10.0, 1e-3, 1e3},
                        {"bins", Kind::integer, 100, 1, 1e6},
                        {"out", Kind::text, "bell_search.json"}};
    t["nogo3"] = {{"modes", Kind::integer, 5, 5, 8},
                  {"photons", Kind::integer, 3, 1, 8},
                  {"partition", Kind::partition, json::array({2, 2, 1})},
                  {"out", Kind::text, "nogo3.json"}};
    t["max-ent"] = {{"alice_modes", Kind::int_list, json::array({1, 2}), 1, 10},
                    {"photons", Kind::int_list, json::array({1, 2, 3, 4}), 1, 12},
                    {"out", Kind::text, "max_ent.csv"}};
    t["bounds-table"] = {{"alice_modes", Kind::int_list, json::array({1, 2, 3}), 1, 30},
                         {"photons", Kind::int_list, json::array({1, 2, 3, 4, 5, 6}), 0, 60},
                         {"out", Kind::text, "bounds_table.csv"}};
    for (const auto& [name, restarts] : {std::pair<std::string, int>{"bell-search", 500}, {"nogo3", 200},
                                         {"max-ent", 50}}) {
      auto extra = optimizer_fields(restarts);
      t[name].insert(t[name].end(), extra.begin(), extra.end());
    }
    return t;
  }();
  return table;
}

const std::vector<Field>& schema_of(const std::string& command) {
  const auto it = schemas().find(command);
  if (it == schemas().end()) throw ConfigError("no configuration for command '" + command + "'");
  return it->second;
}

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

void check_integer(const Field& f, const json& v) {
  if (!v.is_number_integer()) reject(f.name, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < f.lo || x > f.hi) {
    reject(f.name, std::to_string(x) + " outside [" + std::to_string(static_cast<std::int64_t>(f.lo)) + ", " +
                       std::to_string(static_cast<std::int64_t>(f.hi)) + "]");
  }
}

void check_field(const Field& f, const json& v) {
  switch (f.kind) {
    case Kind::integer:
      check_integer(f, v);
      break;
    case Kind::seed:
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        reject(f.name, "expected a non-negative 64-bit integer");
      }
      break;
    case Kind::real:
      if (!v.is_number()) reject(f.name, "expected a number");
      if (!(v.get<double>() >= f.lo && v.get<double>() <= f.hi)) reject(f.name, "out of range");
      break;
    case Kind::boolean:
      if (!v.is_boolean()) reject(f.name, "expected true or false");
      break;
    case Kind::text:
      if (!v.is_string() || v.get<std::string>().empty()) reject(f.name, "expected a non-empty string");
      break;
    case Kind::int_list:
      if (!v.is_array() || v.empty()) reject(f.name, "expected a non-empty list of integers");
      for (const auto& x : v) check_integer(f, x);
      break;
    case Kind::partition:
      if (!v.is_array() || v.size() != 3) reject(f.name, "expected [M_A, M_B, M_H]");
      for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 39) {
          reject(f.name, "expected three integers in [0, 39]");
        }
      }
      break;
  }
}

json parse_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

Partition partition_of(const json& v) { return {v[0].get<int>(), v[1].get<int>(), v[2].get<int>()}; }

// Checks shared by commands that simulate a fixed setup.
ExperimentSetup setup_template(const json& c) {
  const int modes = c["modes"].get<int>();
  const int photons = c["photons"].get<int>();
  const Partition part = partition_of(c["partition"]);
  if (part.modes() != modes) throw ConfigError("partition must cover exactly 'modes' modes");
  if (photons > modes) throw ConfigError("unbunched input needs photons <= modes");
  ExperimentSetup s{Interferometer::identity(modes), OccupationVector::unbunched(modes, photons), part};
  s.validate();
  return s;
}

OptimizationProblem problem_of(const json& c, ObjectiveKind kind, int workers) {
  OptimizationProblem p;
  p.objective = kind;
  p.restarts = c["restarts"].get<int>();
  p.seed = c["seed"].get<std::uint64_t>();
  p.max_iterations = c["max_iterations"].get<int>();
  p.gradient_step = c["gradient_step"].get<double>();
  p.convergence_tol = c["convergence_tol"].get<double>();
  p.workers = workers;
  return p;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& cell : cells) {
    if (!line.empty()) line += ',';
    line += cell;
  }
  return line + '\n';
}

std::string histogram_csv(std::span<const double> values, int bins, double lo, double hi) {
  std::string s = "value,count\n";
  for (const auto& b : histogram(values, bins, lo, hi)) s += csv_row({format_real(b.value), std::to_string(b.count)});
  return s;
}

struct Context {
  json config;
  std::string digest;
  int workers;
  std::ostream& out;
  std::ostream& err;
  std::filesystem::path path() const { return config["out"].get<std::string>(); }
};

// --- commands ------------------------------------------------------------

int haar_sweep(const Context& ctx) {
  const json& c = ctx.config;
  const ExperimentSetup tmpl = setup_template(c);
  const HeraldPlan plan(tmpl.input, tmpl.partition);
  const auto samples = c["samples"].get<std::size_t>();
  const auto seed = c["seed"].get<std::uint64_t>();
  const bool timing = c["timing"].get<bool>();

  std::vector<double> values(samples);
  std::vector<double> runtime_ms(samples);
  parallel_for(samples, ctx.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    values[i] = average_entanglement(plan, haar_sample(tmpl.u.dim(), derive_seed(seed, i)));
    runtime_ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });

  const std::string m = std::to_string(tmpl.u.dim());
  const std::string n = std::to_string(tmpl.input.total());
  const std::string ma = std::to_string(tmpl.partition.alice);
  const std::string mb = std::to_string(tmpl.partition.bob);
  const std::string mh = std::to_string(tmpl.partition.herald);
  std::string rows = "trial,seed,trial_seed,M,n,M_A,M_B,M_H,value,config_digest";
  rows += timing ? ",runtime_ms\n" : "\n";
  for (std::size_t i = 0; i < samples; ++i) {
    std::string line = csv_row({std::to_string(i), std::to_string(seed), std::to_string(derive_seed(seed, i)), m, n,
                                ma, mb, mh, format_real(values[i]), ctx.digest});
    if (timing) line.insert(line.size() - 1, "," + format_real(runtime_ms[i]));
    rows += line;
  }

  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(samples);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double stddev = samples > 1 ? std::sqrt(var / static_cast<double>(samples - 1)) : 0.0;
  const double hi = *std::max_element(values.begin(), values.end());
  const double lo = *std::min_element(values.begin(), values.end());

  const json summary = {{"command", "haar-sweep"}, {"samples", samples},  {"mean", mean},
                        {"stddev", stddev},        {"min", lo},           {"max", hi},
                        {"seed", seed},            {"config_digest", ctx.digest}, {"config", c}};
  write_file_atomic(ctx.path(), rows);
  write_file_atomic(sibling(ctx.path(), "_hist", ".csv"), histogram_csv(values, c["bins"].get<int>(), 0.0, hi));
  write_file_atomic(sibling(ctx.path(), "_summary", ".json"), summary.dump(2) + "\n");
  ctx.out << "samples " << samples << "  mean " << format_real(mean) << "  stddev " << format_real(stddev)
          << "  max " << format_real(hi) << "\n";
  return kExitOk;
}

json search_json(const Context& ctx, const OptimizationProblem& p, const OptimizationResult& r) {
  json j = to_json(r, p.seed, ctx.digest);
  j["objective"] = to_string(p.objective);
  j["config"] = ctx.config;
  return j;
}

void write_minima_histogram(const Context& ctx, const OptimizationResult& r) {
  std::vector<double> finite;
  for (double v : r.per_restart_values) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  const double lo = finite.empty() ? 0.0 : *std::min_element(finite.begin(), finite.end());
  const double hi = finite.empty() ? 0.0 : *std::max_element(finite.begin(), finite.end());
  const int bins = ctx.config.contains("bins") ? ctx.config["bins"].get<int>() : 100;
  write_file_atomic(sibling(ctx.path(), "_hist", ".csv"), histogram_csv(finite, bins, lo, hi));
}

int bell_search(const Context& ctx) {
  const json& c = ctx.config;
  const ExperimentSetup tmpl = setup_template(c);
  OptimizationProblem p = problem_of(c, ObjectiveKind::bell_cost, ctx.workers);
  p.input = tmpl.input;
  p.partition = tmpl.partition;
  p.bell.exponent = c["exponent"].get<double>();
  const OptimizationResult r = minimize(p);
  write_file_atomic(ctx.path(), search_json(ctx, p, r).dump(2) + "\n");
  write_minima_histogram(ctx, r);
  ctx.out << "best " << format_real(r.best_value) << "  failed " << std::count(r.failed.begin(), r.failed.end(), true)
          << "\n";
  return kExitOk;
}

int nogo3(const Context& ctx) {
  const json& c = ctx.config;
  const int modes = c["modes"].get<int>();
  const Partition part = partition_of(c["partition"]);
  if (part.alice != 2 || part.bob != 2 || part.herald != modes - 4) {
    throw ConfigError("nogo3 needs partition [2, 2, modes - 4]");
  }
  const ExperimentSetup tmpl = setup_template(c);
  OptimizationProblem p = problem_of(c, ObjectiveKind::dual_rail_ent_yield, ctx.workers);
  p.input = tmpl.input;
  p.partition = tmpl.partition;
  const OptimizationResult r = minimize(p);

  constexpr double kThreshold = -1e-4;
  const bool consistent = r.best_restart.has_value() && r.best_value >= kThreshold;
  json j = search_json(ctx, p, r);
  j["threshold"] = kThreshold;
  j["verdict"] = consistent ? "consistent with no-go" : "entanglement achievable";
  write_file_atomic(ctx.path(), j.dump(2) + "\n");
  write_minima_histogram(ctx, r);
  ctx.out << "best " << format_real(r.best_value) << "  verdict: " << j["verdict"].get<std::string>() << "\n";
  // Only the three-photon case carries a no-go claim.
  return consistent || tmpl.input.total() != 3 ? kExitOk : kExitFailure;
}

int max_ent(const Context& ctx) {
  const json& c = ctx.config;
  const auto alice = c["alice_modes"].get<std::vector<int>>();
  const auto photons = c["photons"].get<std::vector<int>>();
  const auto seed = c["seed"].get<std::uint64_t>();
  std::string rows =
      "M_A,M_B,M_H,M,n,best_ebits,dimensionality_ebits,linearity_ebits,restarts,seed,point_seed,config_digest\n";
  std::size_t point = 0;
  for (int ma : alice) {
    for (int n : photons) {
      const int mh = std::max(0, n - 2 * ma);
      const int m = 2 * ma + mh;
      if (m + n > 40) throw ConfigError("grid point M_A=" + std::to_string(ma) + ", n=" + std::to_string(n) +
                                        " exceeds the Fock-space capacity");
      OptimizationProblem p = problem_of(c, ObjectiveKind::neg_avg_entanglement, ctx.workers);
      p.input = OccupationVector::unbunched(m, n);
      p.partition = {ma, ma, mh};
      p.seed = derive_seed(seed, point);
      const OptimizationResult r = minimize(p);
      double dim = 0.0;
      for (int ns = 0; ns <= n; ++ns) dim = std::max(dim, dimensionality_bound(ma, ns).ebits);
      rows += csv_row({std::to_string(ma), std::to_string(ma), std::to_string(mh), std::to_string(m),
                       std::to_string(n), format_real(-r.best_value), format_real(dim),
                       format_real(linearity_bound(n)), std::to_string(p.restarts), std::to_string(seed),
                       std::to_string(p.seed), ctx.digest});
      ctx.out << "M_A=" << ma << " n=" << n << "  best " << format_real(-r.best_value) << " ebits\n";
      ++point;
    }
  }
  write_file_atomic(ctx.path(), rows);
  return kExitOk;
}

int bounds_table_cmd(const Context& ctx) {
  const auto alice = ctx.config["alice_modes"].get<std::vector<int>>();
  const auto photons = ctx.config["photons"].get<std::vector<int>>();
  std::string rows = "bound_name,M_A,n,bound_ebits\n";
  for (const auto& r : bounds_table(alice, photons)) {
    rows += csv_row({to_string(r.bound_name), std::to_string(r.alice_modes), std::to_string(r.photons),
                     format_real(r.bound_ebits)});
  }
  write_file_atomic(ctx.path(), rows);
  ctx.out << "wrote " << ctx.path().string() << "\n";
  return kExitOk;
}

int verify(std::ostream& out, bool mutate) {
  const auto results = run_property_suite(mutate ? mutated_permanent_kernel() : default_permanent_kernel());
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
        << "\n";
    all = all && r.passed;
  }
  out << (all ? "all properties hold" : "property failures") << "\n";
  return all ? kExitOk : kExitFailure;
}

}  // namespace

const std::vector<std::string>& configurable_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fields] : schemas()) v.push_back(name);
    return v;
  }();
  return names;
}

json default_config(const std::string& command) {
  json c = {{"schema_version", kSchemaVersion}};
  for (const auto& f : schema_of(command)) c[f.name] = f.fallback;
  return c;
}

void validate_config(const std::string& command, const json& config) {
  const auto& fields = schema_of(command);
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (!config.contains("schema_version")) reject("schema_version", "missing");
  if (config["schema_version"] != kSchemaVersion) {
    reject("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  for (const auto& [key, value] : config.items()) {
    if (key == "schema_version") continue;
    if (std::none_of(fields.begin(), fields.end(), [&](const Field& f) { return f.name == key; })) {
      reject(key, "unknown field for " + command);
    }
  }
  for (const auto& f : fields) {
    if (!config.contains(f.name)) reject(f.name, "missing");
    check_field(f, config[f.name]);
  }
}

json resolve_config(const std::string& command, const std::optional<std::filesystem::path>& path,
                    const std::vector<std::string>& overrides) {
  json c = default_config(command);
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot read config file " + path->string());
    try {
      c = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("malformed config " + path->string() + ": " + e.what());
    }
    validate_config(command, c);
  }
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
    c[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
  }
  validate_config(command, c);
  return c;
}

std::string config_digest(const json& config) {
  json canonical = config;
  for (const auto& key : kOutputOnly) canonical.erase(key);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return {buf, res.ptr};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw ConfigError("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path sibling(const std::filesystem::path& path, const std::string& suffix,
                              const std::string& extension) {
  std::filesystem::path p = path.parent_path() / path.stem();
  p += suffix + extension;
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulation and optimization of entanglement from linear optics", "photent"};
  app.require_subcommand(1);

  struct Common {
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    int workers = 0;
    std::optional<std::string> out;
    std::vector<std::string> set;
  };
  std::map<std::string, Common> common;
  const std::map<std::string, std::string> help = {
      {"haar-sweep", "average entanglement over Haar-random interferometers"},
      {"bell-search", "multi-restart search for heralded Bell-state generators"},
      {"nogo3", "search for dual-rail entanglement from three photons"},
      {"max-ent", "maximal average entanglement over a grid of mode and photon numbers"},
      {"bounds-table", "closed-form entanglement bounds over a grid"}};
  for (const auto& name : configurable_commands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    Common& c = common[name];
    sub->add_option("--config", c.config, "JSON experiment config");
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--workers", c.workers, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", c.out, "output path");
    sub->add_option("--set", c.set, "override a config field, KEY=VALUE")->allow_extra_args(false);
  }
  bool mutate = false;
  std::string mutate_target;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite");
  verify_cmd->add_option("--mutate", mutate_target, "swap in a broken kernel (permanent)")
      ->check(CLI::IsMember({"permanent"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      mutate = mutate_target == "permanent";
      return verify(out, mutate);
    }
    const std::string name = app.get_subcommands().front()->get_name();
    const Common& opts = common.at(name);
    std::vector<std::string> overrides = opts.set;
    if (opts.seed) overrides.push_back("seed=" + std::to_string(*opts.seed));
    if (opts.out) overrides.push_back("out=" + json(*opts.out).dump());
    std::optional<std::filesystem::path> path;
    if (opts.config) path = *opts.config;
    const json config = resolve_config(name, path, overrides);
    const Context ctx{config, config_digest(config), opts.workers, out, err};
    if (name == "haar-sweep") return haar_sweep(ctx);
    if (name == "bell-search") return bell_search(ctx);
    if (name == "nogo3") return nogo3(ctx);
    if (name == "max-ent") return max_ent(ctx);
    return bounds_table_cmd(ctx);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const InvalidDomain& e) {
    err << "invalid setup: " << e.what() << "\n";
  } catch (const CapacityError& e) {
    err << "too large: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace photent::cli
