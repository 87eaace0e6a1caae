// Copyright 2026 The lpstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPSTAB_CLI_SWEEPS_HPP_
#define LPSTAB_CLI_SWEEPS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lpstab/tolerance.hpp"

namespace lpstab::cli {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  /// Cases where the suite's assertion applied (e.g. a hypothesis held).
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// Smallest normalized slack seen; negative beyond tolerance is a failure.
  double worst_margin = 0.0;
  std::string first_failure;
};

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one randomized property suite. Suite i of seed s draws from
/// Sampler(s, i), so results do not depend on which other suites run.
/// Throws InputError for an unknown name.
[[nodiscard]] SuiteResult run_suite(const std::string& name, std::uint64_t seed,
                                    std::uint64_t cases, const Tolerance& tol);

[[nodiscard]] std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::uint64_t cases,
                                                      const Tolerance& tol);

}  // namespace lpstab::cli

#endif  // LPSTAB_CLI_SWEEPS_HPP_
