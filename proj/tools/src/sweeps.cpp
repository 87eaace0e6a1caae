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

#include "lpstab_cli/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <variant>

#include "lpstab/convexity.hpp"
#include "lpstab/errors.hpp"
#include "lpstab/holder.hpp"
#include "lpstab/interpolation.hpp"
#include "lpstab/measure.hpp"
#include "lpstab_cli/sampling.hpp"

namespace lpstab::cli {

namespace {

// Bookkeeping for one suite. `margin` is a slack already divided by the
// natural scale of the compared quantities.
class Recorder {
 public:
  Recorder(SuiteResult& r, const Tolerance& tol) : r_(r), tol_(tol) {}

  // Fails when margin < -allowance; the default allowance is the
  // tolerance's inequality slack.
  void check(double margin, const std::function<std::string()>& describe,
             double allowance = -1.0) {
    if (allowance < 0.0) allowance = tol_.inequality_rel;
    ++r_.checked;
    r_.worst_margin = std::min(r_.worst_margin, margin);
    if (margin < -allowance || std::isnan(margin)) {
      if (r_.failures++ == 0) {
        std::ostringstream out;
        out.precision(17);
        out << "case " << r_.cases << ": " << describe();
        r_.first_failure = out.str();
      }
    }
  }

 private:
  SuiteResult& r_;
  const Tolerance& tol_;
};

std::string show(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

double rel(double slack, double scale) { return slack / std::max(std::abs(scale), 1e-300); }

SimpleFunction unit(const SimpleFunction& f, double p) { return f.scaled(1.0 / quasi_norm(f, p)); }

using CaseFn = std::function<void(Sampler&, Recorder&, const Tolerance&)>;

void young_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const double u = s.log_uniform(1e-4, 1e4);
  const double v = s.log_uniform(1e-4, 1e4);
  const double p = 2.0 - s.uniform(0.0, 1.0);
  const YoungGap y = young_bounds(u, v, p);
  rec.check(std::min(y.gap_rel - y.lower_rel, y.upper_rel - y.gap_rel), [&] {
    return "u=" + show(u) + " v=" + show(v) + " p=" + show(p);
  });
}

void holder_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto f = s.real_function(space, true);
  const auto g = s.real_function(space, true);
  const double p = 1.0 + s.uniform(1e-3, 9.0);
  const auto b = holder_report(f, g, p);
  const double n = quasi_norm(f, p) * quasi_norm(g, conjugate(p).q);
  const double theta = std::sqrt(b.theta_sq);
  const double margin = std::min({rel(b.lower_slack(), n), rel(b.upper_slack(), n),
                                  rel(n - b.upper, n), rel(b.upper, n),
                                  b.angle_rad - theta + 1e-15,
                                  0.5 * std::numbers::pi * theta - b.angle_rad + 1e-15});
  rec.check(margin, [&] {
    return "p=" + show(p) + " lower=" + show(b.lower) + " actual=" + show(b.actual) +
           " upper=" + show(b.upper);
  });
}

void holder_p2_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto f = s.real_function(space, false);
  const auto g = s.real_function(space, false);
  const auto b = holder_report(f, g, 2.0);
  const double n = quasi_norm(f, 2.0) * quasi_norm(g, 2.0);
  const double band = 1e-10 * n;
  const double worst = std::max({b.upper - b.lower, std::abs(b.actual - b.lower),
                                 std::abs(b.upper - b.actual)});
  rec.check(rel(band - worst, n), [&] { return "spread=" + show(worst / n); });
}

void holder_general_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto f = s.real_function(space, true);
  const auto g = s.real_function(space, true);
  const double r = s.log_uniform(0.1, 3.0);
  const double big_p = 1.0 + s.uniform(1e-2, 9.0);
  const double big_q = conjugate(big_p).q;
  const double p = r * big_p;
  const double q = r * big_q;
  const auto b = holder_general(f, g, p, q, r);
  const double n = quasi_norm(f, p) * quasi_norm(g, q);
  rec.check(std::min({rel(b.lower_slack(), n), rel(b.upper_slack(), n), rel(n - b.upper, n)}),
            [&] { return "r=" + show(r) + " p=" + show(p) + " q=" + show(q); });
}

void containment_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), true);
  const auto f = s.real_function(space, true);
  const double sx = s.uniform(0.1, 12.0);
  const double r = sx * s.uniform(0.01, 0.99);
  const auto b = containment_bounds(f, r, sx);
  const double ns = quasi_norm(f, sx);
  rec.check(std::min({rel(b.lower_slack(), ns), rel(b.upper_slack(), ns), rel(ns - b.upper, ns)}),
            [&] { return "r=" + show(r) + " s=" + show(sx); });
}

void variance_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), true);
  const auto f = s.real_function(space, true);
  const double sx = s.uniform(0.1, 12.0);
  const double r = sx * s.uniform(0.01, 0.99);
  const auto b = variance_bounds(f, r, sx);
  const double ns = quasi_norm(f, sx);
  // V/2 <= 1 - ratio <= V on the normalized power |f|^{s/2}.
  const auto u = f.scaled(1.0 / f.max_modulus()).abs_pow(0.5 * sx);
  const double ratio = quasi_norm(u, 1.0) / quasi_norm(u, 2.0);
  const double v = normalized_variance(u);
  rec.check(std::min({rel(b.lower_slack(), ns), rel(b.upper_slack(), ns), rel(ns - b.upper, ns),
                      (1.0 - ratio) - 0.5 * v + 1e-15, v - (1.0 - ratio) + 1e-15}),
            [&] { return "r=" + show(r) + " s=" + show(sx) + " V=" + show(v); });
}

void containment_exact_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), true);
  const auto f = s.real_function(space, true);
  const double r = s.uniform(0.1, 6.0);
  const auto b = containment_bounds(f, r, 2.0 * r);
  const double band = 1e-10 * b.actual;
  rec.check(rel(band - std::max(std::abs(b.upper - b.actual), std::abs(b.lower - b.actual)),
                b.actual),
            [&] { return "r=" + show(r) + " lower=" + show(b.lower) + " upper=" + show(b.upper); });
}

void two_exponent_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto f = s.real_function(space, true);
  const double p0 = s.log_uniform(0.1, 10.0);
  const double p1 = p0 * s.log_uniform(1.05, 10.0);
  const double p = s.uniform(p0, p1);
  if (!(p0 < p && p < p1)) return;
  const auto b = two_exponent_bounds(f, p0, p, p1);
  rec.check(std::min(rel(b.lower_slack(), b.actual), rel(b.upper_slack(), b.actual)), [&] {
    return "p0=" + show(p0) + " p=" + show(p) + " p1=" + show(p1);
  });
}

void midpoint_case(Sampler& s, Recorder& rec, const Tolerance& tol) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto f = s.real_function(space, true);
  const double p0 = s.uniform(0.2, 5.0);
  const double p1 = p0 + s.uniform(0.1, 10.0);
  // Scale a perturbed copy so both endpoint hypotheses hold; the angle
  // hypothesis then holds in roughly half the cases.
  const auto h0 = s.sign_variant(s.coin() ? f : s.real_function(space, true), 0.5);
  const double c = std::max(quasi_norm(f, p0) / quasi_norm(h0, p0),
                            quasi_norm(f, p1) / quasi_norm(h0, p1)) *
                   (1.0 + s.uniform(0.0, 0.02));
  const auto d = midpoint_compare(f, h0.scaled(c), p0, p1, tol);
  if (!d.asserted) return;
  rec.check(rel(d.h_norm_p - d.f_norm_p, d.h_norm_p),
            [&] { return "p0=" + show(p0) + " p1=" + show(p1); }, 1e-10);
}

SimpleFunction nonneg_unit(Sampler& s, const SpacePtr& space, double p) {
  return unit(s.real_function(space, false), p);
}

void mazur_holder_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const double r = s.uniform(1.01, 9.9);
  const double sx = s.uniform(r, 10.0);
  if (!(r < sx)) return;
  const auto f = nonneg_unit(s, space, r);
  const auto h = s.coin() ? nonneg_unit(s, space, r) : unit(s.sign_variant(f, 0.1).abs(), r);
  const double lhs = quasi_norm(mazur_map(f, r, sx) - mazur_map(h, r, sx), sx);
  const double rhs = std::pow(quasi_norm(f - h, r), r / sx);
  rec.check(rhs - lhs, [&] { return "r=" + show(r) + " s=" + show(sx) + " lhs=" + show(lhs) +
                                    " rhs=" + show(rhs); });
}

void mazur_lipschitz_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const double r = s.uniform(1.01, 9.9);
  const double sx = s.uniform(r, 10.0);
  if (!(r < sx)) return;
  const auto f = nonneg_unit(s, space, sx);
  const auto h = s.coin() ? nonneg_unit(s, space, sx) : unit(s.sign_variant(f, 0.1).abs(), sx);
  const double lhs = quasi_norm(mazur_map(f, sx, r) - mazur_map(h, sx, r), r);
  const double rhs = (sx / r) * quasi_norm(f - h, sx);
  rec.check(rel(rhs - lhs, std::max(1.0, rhs)), [&] {
    return "r=" + show(r) + " s=" + show(sx) + " lhs=" + show(lhs) + " rhs=" + show(rhs);
  });
}

std::pair<SimpleFunction, SimpleFunction> real_pair(Sampler& s) {
  const auto space = s.space(s.atoms(), s.coin());
  auto f = s.real_function(space, true);
  auto h = s.coin() ? s.real_function(space, true) : s.sign_variant(f, s.log_uniform(1e-4, 0.5));
  return {std::move(f), std::move(h)};
}

void minkowski_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto [f, h] = real_pair(s);
  const double p = 1.0 + s.uniform(1e-3, 9.0);
  const auto result = refined_minkowski(f, h, p);
  if (std::holds_alternative<DegenerateSum>(result)) return;
  const auto& m = std::get<MinkowskiReport>(result);
  const double sum = m.norm_f + m.norm_h;
  rec.check(std::min(rel(m.bound.upper_slack(), sum), rel(sum - m.bound.upper, sum)),
            [&] { return "p=" + show(p) + " upper=" + show(m.bound.upper); });
}

void trianpos_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto [f, h] = real_pair(s);
  const double p = 1.0 + s.uniform(1e-3, 9.0);
  const auto b = trianpos_bound(f, h, p);
  const double sum = quasi_norm(f, p) + quasi_norm(h, p);
  rec.check(std::min(rel(b.upper_slack(), sum), rel(sum - b.upper, sum)),
            [&] { return "p=" + show(p) + " upper=" + show(b.upper); });
}

void cancellation_case(Sampler& s, Recorder& rec, bool complex) {
  SimpleFunction f = [&] {
    const auto space = s.space(s.atoms(), s.coin());
    return complex ? s.complex_function(space) : s.real_function(space, true);
  }();
  const auto h = s.coin() ? s.sign_variant(f, s.log_uniform(1e-4, 0.3))
                          : (complex ? s.complex_function(f.space())
                                     : s.real_function(f.space(), true));
  const double p = complex ? s.uniform(2.0, 10.0) : s.uniform(1.0, 10.0);
  const double t = s.uniform(0.01, 0.99);
  const auto c = sign_cancellation(f, h, p, t);
  if (!c.hypothesis_holds) return;
  rec.check(rel(c.bound - c.actual, c.bound),
            [&] { return "p=" + show(p) + " t=" + show(t) + " actual=" + show(c.actual) +
                         " bound=" + show(c.bound); });
}

void conditional_case(Sampler& s, Recorder& rec, const Tolerance& tol) {
  const double p = 1.0 + s.uniform(1e-3, 9.0);
  const bool complex = p >= 2.0 && s.coin(0.25);
  const auto space = s.space(std::max<std::size_t>(2, s.atoms()), s.coin());
  const auto f0 = complex ? s.complex_function(space) : s.real_function(space, true);
  const auto h0 = s.coin() ? s.sign_variant(f0, s.log_uniform(1e-4, 0.3))
                           : (complex ? s.complex_function(space) : s.real_function(space, true));
  const double t = s.uniform(0.01, 0.99);
  const auto c = conditional_midpoint_bounds(unit(f0, p), unit(h0, p), p, t, tol);
  rec.check(c.gap - c.bound, [&] {
    return "p=" + show(p) + " t=" + show(t) + " regime=" +
           (c.regime == Regime::kCancellation ? "cancellation" : "moduli") +
           " gap=" + show(c.gap) + " bound=" + show(c.bound);
  });
}

void power_triangle_case(Sampler& s, Recorder& rec, const Tolerance&) {
  const auto space = s.space(s.atoms(), s.coin());
  const auto x = s.real_function(space, true);
  const auto y = s.real_function(space, true);
  const auto z = s.real_function(space, true);
  const double p = 1.0 + s.uniform(1e-3, 9.0);
  const auto c = power_triangle_lemma(x, y, z, p);
  rec.check(rel(c.rhs - c.lhs, c.rhs), [&] { return "p=" + show(p); });
}

struct SuiteDef {
  const char* name;
  CaseFn run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"young", young_case},
      {"holder", holder_case},
      {"holder_p2", holder_p2_case},
      {"holder_general", holder_general_case},
      {"containment", containment_case},
      {"containment_s_eq_2r", containment_exact_case},
      {"variance", variance_case},
      {"two_exponent", two_exponent_case},
      {"midpoint", midpoint_case},
      {"mazur_holder", mazur_holder_case},
      {"mazur_lipschitz", mazur_lipschitz_case},
      {"minkowski", minkowski_case},
      {"trianpos", trianpos_case},
      {"cancellation_real",
       [](Sampler& s, Recorder& r, const Tolerance&) { cancellation_case(s, r, false); }},
      {"cancellation_complex",
       [](Sampler& s, Recorder& r, const Tolerance&) { cancellation_case(s, r, true); }},
      {"conditional", conditional_case},
      {"power_triangle", power_triangle_case},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : suites()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t cases,
                      const Tolerance& tol) {
  const auto& defs = suites();
  const auto it = std::find_if(defs.begin(), defs.end(),
                               [&](const SuiteDef& d) { return name == d.name; });
  if (it == defs.end()) throw InputError("unknown suite '" + name + "'");
  const auto stream = static_cast<std::uint64_t>(it - defs.begin());

  SuiteResult result;
  result.name = name;
  result.worst_margin = std::numeric_limits<double>::infinity();
  Sampler sampler(seed, stream);
  Recorder rec(result, tol);
  for (std::uint64_t k = 0; k < cases; ++k) {
    it->run(sampler, rec, tol);
    ++result.cases;
  }
  return result;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::uint64_t cases,
                                        const Tolerance& tol) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, seed, cases, tol));
  return out;
}

}  // namespace lpstab::cli
