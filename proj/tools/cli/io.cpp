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

#include "cli/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <system_error>

#include "symmap/errors.hpp"

#ifndef SYMMAP_VERSION_STRING
#define SYMMAP_VERSION_STRING "0.0.0"
#endif

namespace symmap::cli {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

json to_json(const RVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

json to_json(const CMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Complex complex_from_json(const json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw DomainError("expected a number or a [re, im] pair, got " + j.dump());
}

json RunManifest::to_json() const {
    return json{{"command", command}, {"parameters", parameters}, {"seed", seed},
                {"version", version}, {"timestamp", timestamp},   {"output", output}};
}

RunManifest make_manifest(std::string command, json parameters, std::uint64_t seed, std::string output) {
    RunManifest m;
    m.command = std::move(command);
    m.parameters = std::move(parameters);
    m.seed = seed;
    m.version = library_version();
    m.timestamp = utc_timestamp();
    m.output = std::move(output);
    return m;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string library_version() { return SYMMAP_VERSION_STRING; }

void write_atomic(const std::filesystem::path &path, const std::string &contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw DomainError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw DomainError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

void append_line(const std::filesystem::path &path, const std::string &line) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw DomainError("cannot open " + path.string() + " for appending");
    out << line << '\n';
    out.flush();
    if (!out) throw DomainError("append to " + path.string() + " failed");
}

}  // namespace symmap::cli
