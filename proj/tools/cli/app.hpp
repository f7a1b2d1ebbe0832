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

#ifndef SYMMAP_CLI_APP_HPP
#define SYMMAP_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace symmap::cli {

inline constexpr int kExitOk = 0;
/// `verify` finished but at least one criterion failed.
inline constexpr int kExitCriteriaFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace symmap::cli

#endif  // SYMMAP_CLI_APP_HPP
