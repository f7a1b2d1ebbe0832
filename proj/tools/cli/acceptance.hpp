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

#ifndef SYMMAP_CLI_ACCEPTANCE_HPP
#define SYMMAP_CLI_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cli/io.hpp"

namespace symmap::cli {

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool numeric_pass = false;
    std::string summary;  ///< one line, deterministic
    json details;         ///< deterministic numbers backing the verdict
    double seconds = 0.0;
    double limit_seconds = 0.0;

    bool passed() const { return numeric_pass && seconds < limit_seconds; }
};

struct AcceptanceReport {
    std::uint64_t seed = 0;
    std::vector<CriterionOutcome> criteria;

    bool all_passed() const;
    /// Everything except timings; identical for identical seeds.
    json payload() const;
    json timing() const;
    /// One PASS/FAIL line per criterion.
    std::string table() const;
};

/// Criteria 1-11. With `check_determinism`, criteria 1-11 are run a second
/// time and criterion 12 compares the two payloads byte for byte.
AcceptanceReport run_acceptance(std::uint64_t seed, bool check_determinism = true);

}  // namespace symmap::cli

#endif  // SYMMAP_CLI_ACCEPTANCE_HPP
