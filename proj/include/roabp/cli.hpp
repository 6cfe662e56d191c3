/*
 * Copyright 2026 The roabp-order Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "roabp/ffield.hpp"
#include "roabp/poly.hpp"

namespace roabp::cli {

enum ExitCode : int { kOk = 0, kNegative = 2, kBudget = 3, kBadInput = 4 };

/// Settings shared by every subcommand; echoed at the top of every report.
struct RunConfig {
  u64 prime = kMersenne61;
  bool prime_explicit = false;
  u64 seed = 1;
  u64 budget_subsets = 1'000'000;
  u64 budget_expansion = kDefaultExpansionBudget;
  bool json = false;
  int verbosity = 0;
};

/// Runs one subcommand. args excludes the program name. The report goes to `out` as
/// "key: value" lines (or one JSON object with --json); diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roabp::cli
