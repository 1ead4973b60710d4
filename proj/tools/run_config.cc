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

#include "run_config.h"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace rydgate::cli {
namespace {

const Json &lookup(const Json &config, const std::string &key) {
    auto it = config.find(key);
    if (it == config.end()) {
        throw ConfigError("missing configuration key '" + key + "'");
    }
    return *it;
}

[[noreturn]] void bad_value(const std::string &key, const Json &value, const char *expected) {
    throw ConfigError("'" + key + "' must be " + expected + ", got " + value.dump());
}

double parse_number(const std::string &key, const std::string &text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ConfigError("'" + key + "': cannot parse number '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

std::vector<double> triple(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    std::vector<double> parts;
    if (value.is_string()) {
        for (const std::string &p : split(value.get<std::string>(), ':')) {
            parts.push_back(parse_number(key, p));
        }
    } else if (value.is_array()) {
        for (const Json &p : value) {
            if (!p.is_number()) {
                bad_value(key, value, "\"lo:hi:step\" or [lo, hi, step]");
            }
            parts.push_back(p.get<double>());
        }
    }
    if (parts.size() != 3) {
        bad_value(key, value, "\"lo:hi:step\" or [lo, hi, step]");
    }
    return parts;
}

}  // namespace

Json resolve_config(const Json &defaults, const Json &file, const Json &flags) {
    Json merged = defaults;
    for (const Json *layer : {&file, &flags}) {
        if (layer->is_null()) {
            continue;
        }
        if (!layer->is_object()) {
            throw ConfigError("configuration must be a JSON object");
        }
        for (auto it = layer->begin(); it != layer->end(); ++it) {
            if (!defaults.contains(it.key())) {
                throw ConfigError("unknown configuration key '" + it.key() + "'");
            }
            merged[it.key()] = it.value();
        }
    }
    return merged;
}

Json load_config_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    try {
        Json doc = Json::parse(in);
        if (!doc.is_object()) {
            throw ConfigError("config file " + path.string() + " must hold a JSON object");
        }
        return doc;
    } catch (const Json::parse_error &e) {
        throw ConfigError("config file " + path.string() + ": " + e.what());
    }
}

double get_double(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        return parse_number(key, value.get<std::string>());
    }
    bad_value(key, value, "a number");
}

int get_int(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    if (!value.is_number_integer()) {
        bad_value(key, value, "an integer");
    }
    return value.get<int>();
}

std::uint64_t get_seed(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        bad_value(key, value, "a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::string get_string(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    if (!value.is_string()) {
        bad_value(key, value, "a string");
    }
    return value.get<std::string>();
}

bool get_bool(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    if (!value.is_boolean()) {
        bad_value(key, value, "true or false");
    }
    return value.get<bool>();
}

AreaGrid get_grid(const Json &config, const std::string &key) {
    std::vector<double> t = triple(config, key);
    AreaGrid grid = AreaGrid::in_pi_units(t[0], t[1], t[2]);
    try {
        grid.axis();
    } catch (const std::exception &e) {
        throw ConfigError("'" + key + "': " + e.what());
    }
    return grid;
}

std::vector<double> get_list(const Json &config, const std::string &key) {
    const Json &value = lookup(config, key);
    std::vector<double> out;
    if (value.is_array()) {
        for (const Json &v : value) {
            if (!v.is_number()) {
                bad_value(key, value, "a list of numbers");
            }
            out.push_back(v.get<double>());
        }
    } else if (value.is_string()) {
        for (const std::string &p : split(value.get<std::string>(), ',')) {
            out.push_back(parse_number(key, p));
        }
    } else if (value.is_number()) {
        out.push_back(value.get<double>());
    }
    if (out.empty()) {
        bad_value(key, value, "a non-empty list of numbers");
    }
    return out;
}

std::vector<double> get_range(const Json &config, const std::string &key) {
    std::vector<double> t = triple(config, key);
    try {
        return AreaGrid{t[0], t[1], t[2]}.axis();
    } catch (const std::exception &e) {
        throw ConfigError("'" + key + "': " + e.what());
    }
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::string hex;
    char byte[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(byte, sizeof byte, "%02x", digest[i]);
        hex += byte;
    }
    return hex;
}

ArtifactWriter::ArtifactWriter(std::string command, Json config)
    : command_(std::move(command)), config_(std::move(config)) {
}

void ArtifactWriter::add(const std::string &name, std::string content) {
    files_[name] = std::move(content);
}

void ArtifactWriter::commit(const std::filesystem::path &dir) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    Json meta;
    meta["tool"] = "rydgate";
    meta["command"] = command_;
    meta["config"] = config_;
    meta["config_sha256"] = sha256_hex(config_.dump());
    Json outputs = Json::object();
    for (const auto &[name, content] : files_) {
        outputs[name] = {{"sha256", sha256_hex(content)}, {"bytes", content.size()}};
    }
    meta["outputs"] = outputs;
    for (const auto &[name, content] : files_) {
        write_atomically(dir / name, content);
    }
    write_atomically(dir / "metadata.json", meta.dump(2) + "\n");
}

void write_atomically(const std::filesystem::path &path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
    }
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

}  // namespace rydgate::cli
