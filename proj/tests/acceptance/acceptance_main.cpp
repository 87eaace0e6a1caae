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

// Acceptance runner. Prints one PASS/FAIL line per criterion; with a
// criterion number as argument it runs only that one. Exit status is 0 iff
// every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lpstab/convexity.hpp"
#include "lpstab/errors.hpp"
#include "lpstab/holder.hpp"
#include "lpstab/interpolation.hpp"
#include "lpstab/measure.hpp"
#include "lpstab/modulus.hpp"
#include "support/oracle.hpp"
#include "support/process.hpp"
#include "support/random.hpp"

namespace {

using namespace lpstab;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Tracks the smallest normalized slack; negative beyond the allowance fails.
struct Margin {
  double allowance;
  double worst = std::numeric_limits<double>::infinity();
  long failures = 0;
  long checked = 0;
  void add(double slack) {
    ++checked;
    worst = std::min(worst, slack);
    if (!(slack >= -allowance)) ++failures;
  }
  [[nodiscard]] std::string text() const {
    return std::to_string(checked) + " checks, worst slack " + fmt(worst) + ", " +
           std::to_string(failures) + " violations";
  }
};

SimpleFunction sign_variant(testgen::Gen& gen, const SimpleFunction& f, double jitter) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f.modulus(i) * (1 + jitter * gen.uniform(-1, 1)) * (gen.coin() ? 1 : -1);
  }
  return {f.space(), v};
}

Outcome young_sandwich() {
  testgen::Gen gen(1001);
  Margin m{1e-12};
  const auto t0 = Clock::now();
  for (int i = 0; i < 100000; ++i) {
    const double u = gen.log_uniform(1e-4, 1e4), v = gen.log_uniform(1e-4, 1e4);
    const double p = 2.0 - gen.uniform(0.0, 1.0);  // (1, 2]
    if (!(p > 1.0)) continue;
    const auto y = young_bounds(u, v, p);
    m.add(y.gap_rel - y.lower_rel);
    m.add(y.upper_rel - y.gap_rel);
  }
  const double secs = seconds_since(t0);
  return {m.failures == 0 && secs < 10.0,
          m.text() + " (relative to max(u^p, v^q)), " + fmt(secs) + " s", {}};
}

Outcome holder_sandwich() {
  testgen::Gen gen(1002);
  Margin m{1e-12};
  long ceiling = 0, negative = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 100000; ++i) {
    const auto s = gen.space();
    const auto f = gen.real(s);
    const auto g = gen.coin(0.9) ? gen.real(s) : gen.complex(s);
    double p = 10.0 - gen.uniform(0.0, 9.0);
    if (!(p > 1.0)) p = 1.0 + 1e-9;
    const auto b = holder_report(f, g, p);
    const double n = quasi_norm(f, p) * quasi_norm(g, conjugate(p).q);
    m.add((b.actual - b.lower) / n);
    m.add((b.upper - b.actual) / n);
    if (b.upper > n * (1 + 1e-15)) ++ceiling;
    if (b.upper < 0.0) ++negative;
  }
  const double secs = seconds_since(t0);
  return {m.failures == 0 && ceiling == 0 && negative == 0 && secs < 60.0,
          m.text() + "; upper > ||f||_p||g||_q: " + std::to_string(ceiling) +
              "; upper < 0: " + std::to_string(negative) + "; " + fmt(secs) + " s",
          {}};
}

Outcome parallelogram() {
  testgen::Gen gen(1003);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto s = gen.space();
    const auto f = gen.real(s, false), g = gen.real(s, false);
    const auto b = holder_report(f, g, 2.0);
    const double n = quasi_norm(f, 2.0) * quasi_norm(g, 2.0);
    worst = std::max({worst, std::abs(b.upper - b.lower) / n, std::abs(b.actual - b.lower) / n,
                      std::abs(b.actual - b.upper) / n});
  }
  return {worst <= 1e-10, "10000 nonnegative pairs, worst band / (||f||_2||g||_2) = " + fmt(worst), {}};
}

Outcome counterexamples() {
  const auto halves = MeasureSpace::create({0.5, 0.5});
  const double p = 4.0 / 3.0;
  // Direct arithmetic: N (1 - theta^2 / 2) with theta^2 = 2 - sqrt 2.
  const auto lower_case = holder_modified(SimpleFunction(halves, std::vector<double>{1, 1}),
                                          SimpleFunction(halves, std::vector<double>{2, 0}), p, 0.5, 0.25);
  const auto upper_case = holder_modified(SimpleFunction(halves, std::vector<double>{2, 0}),
                                          SimpleFunction(halves, std::vector<double>{1, 1}), p, 0.75, 0.5);
  const auto of = oracle::real_fn({0.5L, 0.5L}, {1, 1});
  const auto og = oracle::real_fn({0.5L, 0.5L}, {2, 0});
  const long double theta2 = oracle::chord_sq(of, p, og, 4.0L);
  const long double n = oracle::norm(of, p) * oracle::norm(og, 4.0L);
  const double want_lower = static_cast<double>(n * (1 - 0.5L * theta2));
  const double lo_err = std::max(std::abs(lower_case.lower - std::pow(2.0, 0.25)),
                                 std::abs(lower_case.lower - want_lower));
  const double hi_err = std::abs(upper_case.upper - std::pow(2.0, -0.25));
  const bool pass = lo_err <= 1e-12 && hi_err <= 1e-12 && lower_case.lower > lower_case.actual &&
                    std::abs(lower_case.actual - 1.0) <= 1e-12 &&
                    upper_case.upper < upper_case.actual;
  return {pass,
          "lower-coefficient case " + fmt(lower_case.lower) + " > actual " + fmt(lower_case.actual) +
              " (err " + fmt(lo_err) + "); upper-coefficient case " + fmt(upper_case.upper) +
              " < actual " + fmt(upper_case.actual) + " (err " + fmt(hi_err) + ")",
          {}};
}

Outcome containment_exact() {
  testgen::Gen gen(1005);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto s = gen.space(true);
    const auto f = gen.coin(0.8) ? gen.real(s) : gen.complex(s);
    const double r = gen.uniform(0.05, 6.0);
    const auto b = containment_bounds(f, r, 2 * r);
    const double nr = quasi_norm(f, r);
    worst = std::max({worst, std::abs(b.upper - nr), std::abs(b.lower - nr)});
  }
  return {worst <= 1e-10, "10000 cases, worst |bound - ||f||_r| = " + fmt(worst), {}};
}

Outcome negative_bracket() {
  const auto s = MeasureSpace::create({0.01, 0.99});
  const auto b = containment_bounds(SimpleFunction(s, std::vector<double>{10.0, 0.0}), 1.5, 2.0);
  // Oracle bracket: 1 - max(2r/s, 2(s-r)/s) (1 - ratio), ratio = ||f||_1 / ||f||_2.
  const auto of = oracle::real_fn({0.01L, 0.99L}, {10, 0});
  const long double ratio = oracle::norm(of, 1) / oracle::norm(of, 2);
  const double want = static_cast<double>(1 - 1.5L * (1 - ratio));
  const bool pass = std::abs(b.lower_bracket + 0.35) <= 1e-12 &&
                    std::abs(b.lower_bracket - want) <= 1e-12 && b.lower == 0.0 &&
                    b.positive_part_applied;
  return {pass, "bracket " + fmt(b.lower_bracket) + " (oracle " + fmt(want) + "), lower " +
                    fmt(b.lower), {}};
}

Outcome two_exponent() {
  const auto halves = MeasureSpace::create({0.5, 0.5});
  const auto b = two_exponent_bounds(SimpleFunction(halves, std::vector<double>{2, 1}), 1.0, 1.5, 3.0);
  const auto o = oracle::two_exponent(oracle::real_fn({0.5L, 0.5L}, {2, 1}), 1.0L, 1.5L, 3.0L);
  const double err = std::max({std::abs(b.lower - static_cast<double>(o.lower)),
                               std::abs(b.actual - static_cast<double>(o.actual)),
                               std::abs(b.upper - static_cast<double>(o.upper))});
  const double ref_err = std::max({std::abs(b.lower - 1.5137), std::abs(b.actual - 1.5419),
                                   std::abs(b.upper - 1.5538)});
  testgen::Gen gen(1007);
  Margin m{1e-12};
  for (int i = 0; i < 10000; ++i) {
    const auto s = gen.space(gen.coin());
    const auto f = gen.real(s);
    const double p1 = gen.uniform(0.2, 12.0);
    const double p0 = gen.uniform(0.1, p1 * 0.99);
    const double p = gen.uniform(p0 + 1e-3 * (p1 - p0), p1 - 1e-3 * (p1 - p0));
    const auto r = two_exponent_bounds(f, p0, p, p1);
    m.add((r.actual - r.lower) / r.actual);
    m.add((r.upper - r.actual) / r.actual);
  }
  return {err <= 1e-3 && ref_err <= 1e-3 && m.failures == 0,
          "fixture " + fmt(b.lower) + " <= " + fmt(b.actual) + " <= " + fmt(b.upper) +
              ", oracle err " + fmt(err) + "; random: " + m.text(),
          {}};
}

Outcome midpoint() {
  const std::size_t atoms = 100000;
  const auto grid = unit_interval_grid([](double x) { return x; }, atoms);
  const auto f_grid = unit_interval_grid([](double x) { return x < 0.5 ? 5.0 / 6.0 : 0.0; }, atoms);
  const auto& h = grid.f;
  const SimpleFunction f(h.space(), std::vector<double>(f_grid.f.real_part().begin(), f_grid.f.real_part().end()));
  // Closed-form moments: int h^p = 1/(p+1), int f^p = (5/6)^p / 2.
  auto f_exact = [](double p) { return std::pow(std::pow(5.0 / 6.0, p) / 2.0, 1.0 / p); };
  auto h_exact = [](double p) { return std::pow(1.0 / (p + 1.0), 1.0 / p); };
  double err = 0.0;
  for (double p : {1.0, 6.0, 11.0}) {
    err = std::max({err, std::abs(quasi_norm(f, p) - f_exact(p)), std::abs(quasi_norm(h, p) - h_exact(p))});
  }
  const bool reversal = quasi_norm(f, 1.0) < quasi_norm(h, 1.0) && quasi_norm(f, 6.0) > quasi_norm(h, 6.0);
  const auto d = midpoint_compare(f, h, 1.0, 11.0);
  const bool recovery = d.p0_ordered && d.p1_ordered;
  const bool no_false_claim = !d.angles_ordered && !d.asserted && !d.conclusion_holds;
  return {err <= 1e-3 && reversal && recovery && no_false_claim,
          "grid err " + fmt(err) + "; ||f||_6 " + fmt(d.f_norm_p) + " > ||h||_6 " + fmt(d.h_norm_p) +
              "; ordered at p0=1 and p1=11: " + (recovery ? "yes" : "no") +
              "; angle hypothesis " + (d.angles_ordered ? "holds" : "fails") + ", conclusion " +
              (d.asserted ? "asserted" : "not asserted"),
          {}};
}

Outcome mazur() {
  testgen::Gen gen(1009);
  Margin holder{1e-12}, lipschitz{1e-12};
  for (int i = 0; i < 100000; ++i) {
    const auto s = gen.space();
    const double hi = gen.uniform(1.0, 10.0);
    const double lo = gen.uniform(1.0, hi);
    if (!(lo > 1.0 && hi > lo)) continue;
    const auto fr = gen.unit(gen.real(s, false), lo), hr = gen.unit(gen.real(s, false), lo);
    holder.add(std::pow(norm(fr - hr, lo), lo / hi) - norm(mazur_map(fr, lo, hi) - mazur_map(hr, lo, hi), hi));
    const auto fs = gen.unit(gen.real(s, false), hi), hs = gen.unit(gen.real(s, false), hi);
    lipschitz.add(hi / lo * norm(fs - hs, hi) - norm(mazur_map(fs, hi, lo) - mazur_map(hs, hi, lo), lo));
  }
  return {holder.failures == 0 && lipschitz.failures == 0,
          "Hoelder: " + holder.text() + "; Lipschitz: " + lipschitz.text(), {}};
}

double exponent(testgen::Gen& gen, int regime) {
  return regime == 0 ? gen.uniform(1.0 + 1e-9, 2.0) : gen.uniform(2.0, 10.0);
}

Outcome minkowski() {
  testgen::Gen gen(1010);
  std::string detail;
  bool pass = true;
  for (int regime = 0; regime < 2; ++regime) {
    Margin mk{1e-12}, tp{1e-12};
    long degenerate = 0;
    for (int i = 0; i < 100000; ++i) {
      const auto s = gen.space();
      const auto f = gen.real(s), h = gen.real(s);
      const double p = exponent(gen, regime);
      const double sum = norm(f, p) + norm(h, p);
      const auto r = refined_minkowski(f, h, p);
      if (const auto* m = std::get_if<MinkowskiReport>(&r)) {
        mk.add((m->bound.upper - m->bound.actual) / sum);
        mk.add((sum - m->bound.upper) / sum);
      } else {
        ++degenerate;
      }
      const auto t = trianpos_bound(f, h, p);
      tp.add((t.upper - t.actual) / sum);
      tp.add((sum - t.upper) / sum);
    }
    pass = pass && mk.failures == 0 && tp.failures == 0;
    detail += std::string(regime == 0 ? "p<2" : "p>=2") + " minkowski " + mk.text() +
              ", trianpos " + tp.text() + (degenerate ? ", degenerate " + std::to_string(degenerate) : "") +
              (regime == 0 ? "; " : "");
  }
  return {pass, detail, {}};
}

Outcome cancellation() {
  testgen::Gen gen(1011);
  Margin real{1e-12}, cplx{1e-12};
  long strict_real = 0, strict_cplx = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto s = gen.space();
    const auto f = gen.real(s);
    const auto h = gen.coin(0.7) ? sign_variant(gen, f, gen.uniform(0.0, 0.5)) : gen.real(s);
    const auto c = sign_cancellation(f, h, gen.uniform(1.0, 10.0), gen.uniform(0.01, 0.99));
    if (!c.hypothesis_holds) continue;
    real.add((c.bound - c.actual) / c.bound);
    if (!(c.actual < c.bound)) ++strict_real;
  }
  for (int i = 0; i < 10000; ++i) {
    const auto s = gen.space();
    const auto f = gen.complex(s);
    std::vector<std::complex<double>> hv(f.size());
    for (std::size_t k = 0; k < hv.size(); ++k) {
      hv[k] = f[k] * std::polar(1 + 0.1 * gen.uniform(-1, 1), gen.uniform(-3.1, 3.1));
    }
    const auto c = sign_cancellation(f, SimpleFunction(s, hv), gen.uniform(2.0, 10.0), gen.uniform(0.01, 0.99));
    if (!c.hypothesis_holds) continue;
    cplx.add((c.bound - c.actual) / c.bound);
    if (!(c.actual < c.bound)) ++strict_cplx;
  }
  bool rejected = false;
  try {
    const auto s = MeasureSpace::create({0.5, 0.5});
    const SimpleFunction z(s, std::vector<std::complex<double>>{{1, 0}, {0, 1}});
    (void)sign_cancellation(z, z.scaled(std::complex<double>(0, 1)), 1.5, 0.5);
  } catch (const UnsupportedCase&) {
    rejected = true;
  }
  return {real.failures == 0 && cplx.failures == 0 && rejected && real.checked > 0 && cplx.checked > 0,
          "real: " + real.text() + " (ties at rounding level " + std::to_string(strict_real) + "); complex: " +
              cplx.text() + " (ties at rounding level " + std::to_string(strict_cplx) + "); complex p<2 " +
              (rejected ? "rejected" : "NOT rejected"),
          {}};
}

Outcome conditional() {
  testgen::Gen gen(1012);
  bool pass = true;
  std::string detail;
  for (int regime = 0; regime < 2; ++regime) {
    long fails = 0, cancel = 0, moduli = 0;
    for (int i = 0; i < 100000; ++i) {
      const auto s = gen.space();
      const double p = exponent(gen, regime);
      const auto f = gen.unit(gen.real(s), p);
      const auto h = gen.unit(gen.coin() ? sign_variant(gen, f, 0.3) : gen.real(s), p);
      const auto c = conditional_midpoint_bounds(f, h, p, gen.uniform(0.05, 0.95));
      ++(c.regime == Regime::kCancellation ? cancel : moduli);
      if (!c.holds) ++fails;
    }
    pass = pass && fails == 0 && cancel > 0 && moduli > 0;
    detail += std::string(regime == 0 ? "p<2" : "p>=2") + ": " + std::to_string(cancel) +
              " cancellation / " + std::to_string(moduli) + " moduli pairs, " +
              std::to_string(fails) + " violations" + (regime == 0 ? "; " : "");
  }
  return {pass, detail, {}};
}

Outcome modulus() {
  const auto t0 = Clock::now();
  SearchConfig cfg;  // 32 restarts
  cfg.seed = 2026;
  double hilbert_err = 0.0;
  for (double e : {0.2, 0.5, 1.0, 1.5}) {
    const auto m = estimate_modulus(2.0, 2, e, cfg);
    hilbert_err = std::max(hilbert_err, std::abs(m.delta_estimate - static_cast<double>(oracle::hilbert_delta(e))));
  }
  const auto m4 = estimate_modulus(4.0, 2, 0.5, cfg);
  const double secs = seconds_since(t0);
  const double hanner = static_cast<double>(oracle::hanner_root(4.0L, 0.5L));
  const double clarkson = static_cast<double>(oracle::clarkson_delta(4.0L, 0.5L));
  const double rel_hanner = std::abs(m4.delta_estimate / hanner - 1.0);
  const double floor = 0.5 * 0.5 * 0.5 * 0.5 / (4 * 16 + 16);
  const bool hilbert_ok = hilbert_err <= 1e-3;
  const bool hanner_ok = rel_hanner <= 0.02;
  const bool floor_ok = m4.delta_estimate >= floor;
  Outcome o{hilbert_ok && hanner_ok && floor_ok && secs < 120.0,
            "p=2 max err " + fmt(hilbert_err) + (hilbert_ok ? " ok" : " FAIL") + "; p=4 estimate " +
                fmt(m4.delta_estimate) + " vs Hanner-equation oracle " + fmt(hanner) + " (rel " +
                fmt(rel_hanner) + (hanner_ok ? " ok" : " FAIL") + "), >= " + fmt(floor) +
                (floor_ok ? " ok" : " FAIL") + "; " + fmt(secs) + " s",
            {}};
  o.notes.push_back("diagnostic: p=4 estimate / Clarkson value 1-(1-(eps/2)^p)^(1/p) = " +
                    fmt(m4.delta_estimate / clarkson) + "; the symmetric pair (1+a,1-a)/(1-a,1+a) "
                    "attains " + fmt(clarkson) + " < 0.98 * " + fmt(hanner) +
                    ", so no feasible pair can reach the Hanner-equation value at p > 2");
  return o;
}

Outcome cli_determinism() {
  const std::string cli = testproc::quote(LPSTAB_CLI_PATH);
  const std::string data = std::string(LPSTAB_TEST_DATA) + "/";
  const auto a = testproc::run(cli + " verify --seed 42 2>/dev/null");
  const auto b = testproc::run(cli + " verify --seed 42 2>/dev/null");
  const bool same = a.exit_code == 0 && b.exit_code == 0 && a.out == b.out && !a.out.empty();
  struct Row {
    std::string args;
    int expected;
  };
  const Row rows[] = {
      {"fixtures", 0},
      {"holder --p 2 --input " + testproc::quote(data + "pair.json"), 0},
      {"holder --p 3 --input " + testproc::quote(data + "pair.csv"), 0},
      {"holder --p 1.3333333333333333 --c-lo 0.5 --input " + testproc::quote(data + "modified_example.json"), 1},
      {"cancel --p 1.5 --input " + testproc::quote(data + "complex_pair.json"), 2},
      {"holder --p 2 --input " + testproc::quote(data + "bad_weight.csv"), 2},
      {"holder --p 2 --input " + testproc::quote(data + "malformed.json"), 2},
      {"holder --p 2 --drago --input " + testproc::quote(data + "with_zero.json"), 2},
      {"convexity --p 2 --eps 3", 2},
      {"verify", 2},
  };
  int mismatches = 0;
  for (const auto& r : rows) {
    if (testproc::run(cli + " " + r.args + " >/dev/null 2>&1").exit_code != r.expected) ++mismatches;
  }
  return {same && mismatches == 0,
          std::string("verify --seed 42 twice: ") + (same ? "byte-identical" : "DIFFERENT") + " (" +
              std::to_string(a.out.size()) + " bytes); exit-code matrix " +
              std::to_string(std::size(rows) - static_cast<std::size_t>(mismatches)) + "/" +
              std::to_string(std::size(rows)),
          {}};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "refined Young sandwich", young_sandwich},
      {2, "refined Hoelder sandwich", holder_sandwich},
      {3, "parallelogram collapse at p = 2", parallelogram},
      {4, "modified-coefficient counterexamples", counterexamples},
      {5, "containment exactness at s = 2r", containment_exact},
      {6, "negative-bracket fixture", negative_bracket},
      {7, "two-exponent sandwich", two_exponent},
      {8, "midpoint fixtures", midpoint},
      {9, "Mazur map properties", mazur},
      {10, "refined Minkowski and trianpos", minkowski},
      {11, "sign cancellation bounds", cancellation},
      {12, "per-pair convexity bounds", conditional},
      {13, "modulus estimator", modulus},
      {14, "CLI determinism and exit codes", cli_determinism},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failed = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " -- "
              << o.detail << "\n";
    for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
