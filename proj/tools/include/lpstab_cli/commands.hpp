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

#ifndef LPSTAB_CLI_COMMANDS_HPP_
#define LPSTAB_CLI_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "lpstab/tolerance.hpp"
#include "lpstab_cli/input.hpp"
#include "lpstab_cli/report.hpp"

namespace lpstab::cli {

// Each command evaluates one family of bounds and records every asserted
// inequality that failed beyond tolerance as a violation. Library errors
// (InputError, DomainError, UnsupportedCase) propagate to the caller.

struct HolderArgs {
  double p = 2.0;
  std::optional<double> q;  // only with r
  std::optional<double> r;
  std::optional<double> c_lo;
  std::optional<double> c_hi;
  bool drago = false;
  bool pecaric = false;
  std::string f = "f";
  std::string g = "g";
};
ReportDocument run_holder(const InputDocument& in, const HolderArgs& a, const Tolerance& tol);

struct YoungArgs {
  double p = 2.0;
  std::optional<double> u;
  std::optional<double> v;
  std::string f = "f";
  std::string g = "g";
};
/// Uses u, v when both are set, otherwise the moduli of f and g atom by
/// atom. `in` may be null in the first case.
ReportDocument run_young(const InputDocument* in, const YoungArgs& a, const Tolerance& tol);

struct InterpArgs {
  double r = 1.0;
  double s = 2.0;
  std::string f = "f";
};
ReportDocument run_interp(const InputDocument& in, const InterpArgs& a, const Tolerance& tol);

struct Interp2Args {
  double p0 = 1.0;
  double p1 = 3.0;
  std::optional<double> p;  // defaults to the midpoint
  std::string f = "f";
  std::string h = "h";
};
/// Two-exponent bounds for f; adds the midpoint comparison when h exists.
ReportDocument run_interp2(const InputDocument& in, const Interp2Args& a, const Tolerance& tol);

struct PairArgs {
  double p = 2.0;
  double t = 0.5;
  std::string f = "f";
  std::string h = "h";
};
ReportDocument run_minkowski(const InputDocument& in, const PairArgs& a, const Tolerance& tol);
ReportDocument run_cancel(const InputDocument& in, const PairArgs& a, const Tolerance& tol);

struct ConvexityArgs {
  double p = 2.0;
  double eps = 1.0;
  double t = 0.5;
  std::uint64_t seed = 0;
  int restarts = 32;
  int dims = 2;
  int iterations = 2000;
  double c = 2.0;  // constant of the small-eps diagnostic, c > 1
};
ReportDocument run_convexity(const ConvexityArgs& a, const Tolerance& tol);

ReportDocument run_fixtures(const Tolerance& tol);

struct VerifyArgs {
  std::uint64_t seed = 0;
  std::uint64_t cases = 1000;
};
ReportDocument run_verify(const VerifyArgs& a, const Tolerance& tol);

}  // namespace lpstab::cli

#endif  // LPSTAB_CLI_COMMANDS_HPP_
