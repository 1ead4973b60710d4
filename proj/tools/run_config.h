// Copyright 2026 The rydgate Authors
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

// Run configuration plumbing for the command-line tool: layered config
// resolution, typed accessors and artifact output.

#ifndef RYDGATE_TOOLS_RUN_CONFIG_H_
#define RYDGATE_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rydgate/fidelity.h"

namespace rydgate::cli {

using Json = nlohmann::ordered_json;

/// Thrown for anything the user can fix by changing flags or the config file.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Layers `file` and then `flags` over `defaults`. Keys absent from defaults
/// are rejected.
Json resolve_config(const Json &defaults, const Json &file, const Json &flags);

/// Reads a JSON object from disk.
Json load_config_file(const std::filesystem::path &path);

double get_double(const Json &config, const std::string &key);
int get_int(const Json &config, const std::string &key);
std::uint64_t get_seed(const Json &config, const std::string &key);
std::string get_string(const Json &config, const std::string &key);
bool get_bool(const Json &config, const std::string &key);

/// "lo:hi:step" in units of pi, or a [lo, hi, step] array.
AreaGrid get_grid(const Json &config, const std::string &key);
/// Comma separated numbers or a JSON array.
std::vector<double> get_list(const Json &config, const std::string &key);
/// "lo:hi:step" (or array) expanded to an inclusive list of plain numbers.
std::vector<double> get_range(const Json &config, const std::string &key);

std::string sha256_hex(std::string_view data);

/// Collects output files in memory and commits each with write-then-rename
/// together with a metadata.json describing the run.
class ArtifactWriter {
   public:
    ArtifactWriter(std::string command, Json config);

    void add(const std::string &name, std::string content);
    /// Writes every file into `dir` (created if missing). Throws
    /// std::runtime_error on I/O failure; no partial file is left behind.
    void commit(const std::filesystem::path &dir) const;

   private:
    std::string command_;
    Json config_;
    std::map<std::string, std::string> files_;
};

/// Writes `content` to path via a temporary sibling and an atomic rename.
void write_atomically(const std::filesystem::path &path, std::string_view content);

/// Nine significant digits, as in the library CSV writers.
std::string format_number(double value);

}  // namespace rydgate::cli

#endif  // RYDGATE_TOOLS_RUN_CONFIG_H_
