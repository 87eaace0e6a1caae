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

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lpstab/errors.hpp"
#include "lpstab_cli/commands.hpp"
#include "lpstab_cli/input.hpp"
#include "lpstab_cli/report.hpp"

namespace {

using namespace lpstab::cli;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "json";
  std::optional<double> rel_tol;
  std::string input;
  std::string input_format;
};

void add_common(CLI::App* cmd, Common& c, bool reads_input) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--rel-tol", c.rel_tol, "Relative slack for inequality checks");
  if (reads_input) {
    cmd->add_option("--input", c.input, "Input file (default: standard input)");
    cmd->add_option("--input-format", c.input_format, "json or csv (default: by extension)")
        ->check(CLI::IsMember({"json", "csv"}));
  }
}

lpstab::Tolerance tolerance(const Common& c) {
  lpstab::Tolerance tol;
  if (c.rel_tol) {
    tol.inequality_rel = *c.rel_tol;
  } else if (const char* env = std::getenv("LPSTAB_REL_TOL"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw lpstab::InputError("LPSTAB_REL_TOL is not a number: '" + std::string(text) + "'");
    }
    tol.inequality_rel = v;
  }
  if (!(tol.inequality_rel >= 0.0) || !std::isfinite(tol.inequality_rel)) {
    throw lpstab::InputError("relative tolerance must be finite and nonnegative");
  }
  return tol;
}

InputDocument read_input(const Common& c) {
  InputFormat fmt = InputFormat::kJson;
  if (!c.input_format.empty()) {
    fmt = parse_input_format(c.input_format);
  } else if (c.input.size() >= 4 && c.input.compare(c.input.size() - 4, 4, ".csv") == 0) {
    fmt = InputFormat::kCsv;
  }
  if (c.input.empty() || c.input == "-") return parse_input(std::cin, fmt);
  std::ifstream file(c.input);
  if (!file) throw lpstab::InputError("cannot open '" + c.input + "'");
  return parse_input(file, fmt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined Young, Hoelder and Minkowski bounds on finite measure spaces"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  HolderArgs holder;
  YoungArgs young;
  InterpArgs interp;
  Interp2Args interp2;
  PairArgs mink, cancel;
  ConvexityArgs convex;
  VerifyArgs verify;

  auto* c_holder = app.add_subcommand("holder", "Refined Hoelder sandwich for ||fg||_1 or ||fg||_r");
  c_holder->add_option("--p", holder.p)->required();
  c_holder->add_option("--q", holder.q, "With --r; defaults to 1/(1/r - 1/p)");
  c_holder->add_option("--r", holder.r, "Bound ||fg||_r instead of ||fg||_1");
  c_holder->add_option("--c-lo", holder.c_lo, "Trial lower coefficient");
  c_holder->add_option("--c-hi", holder.c_hi, "Trial upper coefficient");
  c_holder->add_flag("--drago", holder.drago, "Add the logarithmic deficit chain");
  c_holder->add_flag("--pecaric", holder.pecaric, "Add the p >= 2 comparison bounds");
  c_holder->add_option("--f", holder.f, "Name of f in the input");
  c_holder->add_option("--g", holder.g, "Name of g in the input");
  add_common(c_holder, common, true);

  auto* c_young = app.add_subcommand("young", "Refined Young gap");
  c_young->add_option("--p", young.p)->required();
  c_young->add_option("--u", young.u);
  c_young->add_option("--v", young.v);
  c_young->add_option("--f", young.f);
  c_young->add_option("--g", young.g);
  add_common(c_young, common, true);

  auto* c_interp = app.add_subcommand("interp", "||f||_r from ||f||_s on a probability space");
  c_interp->add_option("--r", interp.r)->required();
  c_interp->add_option("--s", interp.s)->required();
  c_interp->add_option("--f", interp.f);
  add_common(c_interp, common, true);

  auto* c_interp2 = app.add_subcommand("interp2", "||f||_p between ||f||_p0 and ||f||_p1");
  c_interp2->add_option("--p0", interp2.p0)->required();
  c_interp2->add_option("--p1", interp2.p1)->required();
  c_interp2->add_option("--p", interp2.p, "Defaults to (p0 + p1)/2");
  c_interp2->add_option("--f", interp2.f);
  c_interp2->add_option("--h", interp2.h, "Compared at the midpoint when present");
  add_common(c_interp2, common, true);

  auto* c_mink = app.add_subcommand("minkowski", "Refined triangle inequality");
  c_mink->add_option("--p", mink.p)->required();
  c_mink->add_option("--f", mink.f);
  c_mink->add_option("--h", mink.h);
  add_common(c_mink, common, true);

  auto* c_cancel = app.add_subcommand("cancel", "Sign cancellation bound");
  c_cancel->add_option("--p", cancel.p)->required();
  c_cancel->add_option("--t", cancel.t);
  c_cancel->add_option("--f", cancel.f);
  c_cancel->add_option("--h", cancel.h);
  add_common(c_cancel, common, true);

  auto* c_convex = app.add_subcommand("convexity", "Modulus of convexity of l_p^n");
  c_convex->add_option("--p", convex.p)->required();
  c_convex->add_option("--eps", convex.eps)->required();
  c_convex->add_option("--t", convex.t);
  c_convex->add_option("--seed", convex.seed);
  c_convex->add_option("--restarts", convex.restarts);
  c_convex->add_option("--dims", convex.dims);
  c_convex->add_option("--iterations", convex.iterations);
  c_convex->add_option("--c", convex.c, "Constant of the small-eps diagnostic");
  add_common(c_convex, common, false);

  auto* c_fixtures = app.add_subcommand("fixtures", "Reproduce the reference examples");
  add_common(c_fixtures, common, false);

  auto* c_verify = app.add_subcommand("verify", "Randomized property suites");
  c_verify->add_option("--seed", verify.seed)->required();
  c_verify->add_option("--cases", verify.cases, "Cases per suite");
  add_common(c_verify, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto tol = tolerance(common);
    ReportDocument report;
    if (c_holder->parsed()) {
      report = run_holder(read_input(common), holder, tol);
    } else if (c_young->parsed()) {
      if (young.u && young.v) {
        report = run_young(nullptr, young, tol);
      } else {
        const auto doc = read_input(common);
        report = run_young(&doc, young, tol);
      }
    } else if (c_interp->parsed()) {
      report = run_interp(read_input(common), interp, tol);
    } else if (c_interp2->parsed()) {
      report = run_interp2(read_input(common), interp2, tol);
    } else if (c_mink->parsed()) {
      report = run_minkowski(read_input(common), mink, tol);
    } else if (c_cancel->parsed()) {
      report = run_cancel(read_input(common), cancel, tol);
    } else if (c_convex->parsed()) {
      report = run_convexity(convex, tol);
    } else if (c_fixtures->parsed()) {
      report = run_fixtures(tol);
    } else {
      report = run_verify(verify, tol);
    }
    std::cout << emit_report(report, parse_output_format(common.format));
    return report.violations.empty() ? kExitOk : kExitViolation;
  } catch (const lpstab::UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
  } catch (const lpstab::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const lpstab::Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
  }
  return kExitUsage;
}
