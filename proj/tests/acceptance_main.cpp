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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "cli/acceptance.hpp"

int main(int argc, char **argv) {
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
    symmap::cli::AcceptanceReport report = symmap::cli::run_acceptance(seed);
    std::cout << "seed " << seed << "\n" << report.table();
    return report.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
