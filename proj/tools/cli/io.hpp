// Copyright 2026 The symmap Authors
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

#ifndef SYMMAP_CLI_IO_HPP
#define SYMMAP_CLI_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "symmap/symcore.hpp"

namespace symmap::cli {

using nlohmann::json;

json to_json(Complex z);
json to_json(const CVector &v);
json to_json(const RVector &v);
json to_json(const CMatrix &m);

/// Accepts a number (real) or a [re, im] pair.
Complex complex_from_json(const json &j);

struct RunManifest {
    std::string command;
    json parameters = json::object();
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;
    std::string output;

    json to_json() const;
};

RunManifest make_manifest(std::string command, json parameters, std::uint64_t seed, std::string output);

/// UTC, ISO 8601 with second resolution.
std::string utc_timestamp();

std::string library_version();

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path &path, const std::string &contents);

/// Appends one line and flushes.
void append_line(const std::filesystem::path &path, const std::string &line);

}  // namespace symmap::cli

#endif  // SYMMAP_CLI_IO_HPP
