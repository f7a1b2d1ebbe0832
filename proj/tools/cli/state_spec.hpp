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

#ifndef SYMMAP_CLI_STATE_SPEC_HPP
#define SYMMAP_CLI_STATE_SPEC_HPP

#include <optional>
#include <string>

#include "symmap/errors.hpp"
#include "symmap/symcore.hpp"

namespace symmap::cli {

/// Malformed user input, located by line and column (both 1-based).
class ParseError : public Error {
   public:
    ParseError(const std::string &source, int line, int column, const std::string &what)
        : Error("ParseError: " + source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

/// Raw values of the mutually exclusive state options.
struct StateArgs {
    std::optional<std::string> dicke;  ///< "N,k"
    std::optional<std::string> ghz;
    std::optional<std::string> w;
    std::optional<std::string> mes;
    std::optional<std::string> coeffs;  ///< real, comma separated, normalized on input
    std::optional<std::string> coeffs_file;

    bool any() const { return dicke || ghz || w || mes || coeffs || coeffs_file; }
};

struct ResolvedState {
    std::string label;
    SymmetricState state;
    std::optional<int> dicke_k;
};

/// Exactly one option must be set.
ResolvedState resolve_state(const StateArgs &args);

/// Comma separated integers, e.g. "4,1".
std::vector<int> parse_int_list(const std::string &text, const std::string &source);
std::vector<double> parse_real_list(const std::string &text, const std::string &source);

/// Coefficients from JSON text: a bare array, {"coeffs": [...]}, or a `map` document.
/// Entries are numbers or [re, im] pairs. The result is normalized.
SymmetricState parse_state_json(const std::string &text, const std::string &source);

}  // namespace symmap::cli

#endif  // SYMMAP_CLI_STATE_SPEC_HPP
