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

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "photent/cli.hpp"
#include "photent/error.hpp"

namespace fs = std::filesystem;
using namespace photent;
using nlohmann::json;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("photent_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("config resolution and validation") {
  for (const auto& name : cli::configurable_commands()) {
    CAPTURE(name);
    const json c = cli::default_config(name);
    CHECK_NOTHROW(cli::validate_config(name, c));
    CHECK(c["schema_version"] == cli::kSchemaVersion);
  }
  CHECK(cli::resolve_config("haar-sweep", std::nullopt, {"samples=7"})["samples"] == 7);
  CHECK(cli::resolve_config("haar-sweep", std::nullopt, {"out=x.csv"})["out"] == "x.csv");
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", std::nullopt, {"sampels=7"}), ConfigError);
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", std::nullopt, {"samples=0"}), ConfigError);
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", std::nullopt, {"samples=1.5"}), ConfigError);
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", std::nullopt, {"partition=[1,1]"}), ConfigError);
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", std::nullopt, {"noequals"}), ConfigError);
  CHECK_THROWS_AS(cli::resolve_config("verify", std::nullopt, {}), ConfigError);

  Scratch tmp;
  json partial = {{"schema_version", 1}, {"samples", 3}};
  std::ofstream(tmp / "partial.json") << partial.dump();
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", fs::path(tmp / "partial.json"), {}), ConfigError);

  json full = cli::default_config("haar-sweep");
  full["samples"] = 3;
  std::ofstream(tmp / "full.json") << full.dump();
  CHECK(cli::resolve_config("haar-sweep", fs::path(tmp / "full.json"), {})["samples"] == 3);

  full["schema_version"] = 2;
  std::ofstream(tmp / "future.json") << full.dump();
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", fs::path(tmp / "future.json"), {}), ConfigError);

  std::ofstream(tmp / "broken.json") << "{\"samples\": ";
  CHECK_THROWS_AS(cli::resolve_config("haar-sweep", fs::path(tmp / "broken.json"), {}), ConfigError);
}

TEST_CASE("config digest ignores output-only fields") {
  json a = cli::default_config("haar-sweep");
  json b = a;
  b["out"] = "elsewhere.csv";
  b["timing"] = true;
  CHECK(cli::config_digest(a) == cli::config_digest(b));
  b["seed"] = 2;
  CHECK(cli::config_digest(a) != cli::config_digest(b));
  CHECK(cli::config_digest(a).size() == 16);
}

TEST_CASE("number formatting and file helpers") {
  CHECK(cli::format_real(0.1) == "0.10000000000000001");
  CHECK(cli::format_real(2.0) == "2");
  CHECK(std::stod(cli::format_real(std::log2(3.0))) == std::log2(3.0));
  CHECK(cli::sibling("dir/out.csv", "_hist", ".csv") == fs::path("dir/out_hist.csv"));

  Scratch tmp;
  cli::write_file_atomic(tmp / "a.txt", "first");
  cli::write_file_atomic(tmp / "a.txt", "second");
  CHECK(slurp(tmp / "a.txt") == "second");
  CHECK_FALSE(fs::exists(tmp / "a.txt.tmp"));
}

TEST_CASE("exit codes") {
  Scratch tmp;
  CHECK(run({}) == cli::kExitUsage);
  CHECK(run({"frobnicate"}) == cli::kExitUsage);
  CHECK(run({"haar-sweep", "--workers", "-3"}) == cli::kExitUsage);
  CHECK(run({"haar-sweep", "--set", "samples=-1", "--out", tmp / "x.csv"}) == cli::kExitUsage);
  CHECK_FALSE(fs::exists(tmp / "x.csv"));
  CHECK(run({"nogo3", "--set", "partition=[2,3,0]", "--out", tmp / "n.json"}) == cli::kExitUsage);
  CHECK(run({"nogo3", "--set", "modes=9"}) == cli::kExitUsage);
  CHECK(run({"haar-sweep", "--config", tmp / "missing.json"}) == cli::kExitUsage);
  CHECK(run({"haar-sweep", "--set", "modes=3", "--set", "partition=[1,1,0]", "--out", tmp / "y.csv"}) ==
        cli::kExitUsage);
  CHECK(run({"verify", "--mutate", "entropy"}) == cli::kExitUsage);
  CHECK(run({"--help"}) == cli::kExitOk);
}

TEST_CASE("haar sweep output") {
  Scratch tmp;
  const std::vector<std::string> args = {"haar-sweep", "--set", "modes=2",  "--set", "photons=2", "--set",
                                         "partition=[1,1,0]",  "--set", "samples=100", "--seed", "5",
                                         "--out",        tmp / "a.csv"};
  REQUIRE(run(args) == cli::kExitOk);
  const auto rows = read_csv(tmp / "a.csv");
  REQUIRE(rows.size() == 101);
  CHECK(rows[0] == std::vector<std::string>{"trial", "seed", "trial_seed", "M", "n", "M_A", "M_B", "M_H", "value",
                                            "config_digest"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][0] == std::to_string(i - 1));
    CHECK(rows[i][1] == "5");
    CHECK(std::stod(rows[i][8]) <= std::log2(3.0) + 1e-9);
  }
  const auto hist = read_csv(tmp / "a_hist.csv");
  CHECK(hist.size() == 101);
  std::size_t total = 0;
  for (std::size_t i = 1; i < hist.size(); ++i) total += std::stoul(hist[i][1]);
  CHECK(total == 100);
  const json summary = json::parse(slurp(tmp / "a_summary.json"));
  CHECK(summary["samples"] == 100);
  CHECK(summary["config_digest"] == rows[1][9]);

  auto with_workers = args;
  with_workers.back() = tmp / "b.csv";
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  REQUIRE(run(with_workers) == cli::kExitOk);
  CHECK(slurp(tmp / "a.csv") == slurp(tmp / "b.csv"));
  CHECK(slurp(tmp / "a_hist.csv") == slurp(tmp / "b_hist.csv"));

  auto timed = args;
  timed.back() = tmp / "c.csv";
  timed.insert(timed.end(), {"--set", "timing=true"});
  REQUIRE(run(timed) == cli::kExitOk);
  const auto trows = read_csv(tmp / "c.csv");
  CHECK(trows[0].back() == "runtime_ms");
  CHECK(trows[1][9] == rows[1][9]);
}

TEST_CASE("single-sample sweeps are byte-identical") {
  Scratch tmp;
  for (const char* name : {"one.csv", "two.csv"}) {
    REQUIRE(run({"haar-sweep", "--set", "samples=1", "--seed", "42", "--out", tmp / name}) == cli::kExitOk);
  }
  CHECK(slurp(tmp / "one.csv") == slurp(tmp / "two.csv"));
}

TEST_CASE("bounds table command") {
  Scratch tmp;
  REQUIRE(run({"bounds-table", "--out", tmp / "b.csv"}) == cli::kExitOk);
  const auto rows = read_csv(tmp / "b.csv");
  CHECK(rows[0] == std::vector<std::string>{"bound_name", "M_A", "n", "bound_ebits"});
  bool dim22 = false, lin5 = false;
  for (const auto& r : rows) {
    if (r[0] == "dimensionality" && r[1] == "2" && r[2] == "2") dim22 = std::stod(r[3]) == 2.0;
    if (r[0] == "linearity" && r[2] == "5") lin5 = std::stod(r[3]) == 5.0;
  }
  CHECK(dim22);
  CHECK(lin5);
}

TEST_CASE("search commands") {
  Scratch tmp;
  std::string text;
  REQUIRE(run({"max-ent", "--set", "alice_modes=[1]", "--set", "photons=[1,2]", "--set", "restarts=5", "--out",
               tmp / "m.csv"},
              &text) == cli::kExitOk);
  const auto rows = read_csv(tmp / "m.csv");
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(std::stod(rows[1][5]) - 1.0) < 1e-6);
  CHECK(std::abs(std::stod(rows[2][5]) - std::log2(3.0)) < 1e-6);

  REQUIRE(run({"nogo3", "--set", "photons=1", "--set", "restarts=2", "--out", tmp / "n.json"}) == cli::kExitOk);
  const json nogo = json::parse(slurp(tmp / "n.json"));
  CHECK(nogo["verdict"] == "consistent with no-go");
  CHECK(nogo["per_restart_values"].size() == 2);

  REQUIRE(run({"bell-search", "--set", "restarts=2", "--set", "max_iterations=5", "--out", tmp / "s.json"}) ==
          cli::kExitOk);
  const json bell = json::parse(slurp(tmp / "s.json"));
  CHECK(bell["objective"] == "bell_cost");
  CHECK(bell["params"]["dim"] == 8);
  CHECK(fs::exists(tmp / "s_hist.csv"));
}
