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

// Command-line driver: JSON experiment configs, seeded sweeps and searches,
// CSV/JSON result files.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace photent::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Commands that take a configuration.
const std::vector<std::string>& configurable_commands();

/// Built-in configuration of `command`, including schema_version.
nlohmann::json default_config(const std::string& command);

/// Effective configuration: the defaults, or the file at `path` (which must
/// name every field), then each "key=value" override in order. Values parse
/// as JSON and fall back to plain strings. Throws ConfigError.
nlohmann::json resolve_config(const std::string& command, const std::optional<std::filesystem::path>& path,
                              const std::vector<std::string>& overrides);

/// Checks types and ranges against the command's schema. Throws ConfigError.
void validate_config(const std::string& command, const nlohmann::json& config);

/// 16 hex digits of FNV-1a over the canonical dump, without output-only fields.
std::string config_digest(const nlohmann::json& config);

/// Shortest decimal string with 17 significant digits.
std::string format_real(double value);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// `path` with `suffix` inserted before the extension: out.csv -> out_hist.csv.
std::filesystem::path sibling(const std::filesystem::path& path, const std::string& suffix,
                              const std::string& extension);

/// Entry point. `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace photent::cli
