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

#include "lpstab_cli/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "lpstab/convexity.hpp"
#include "lpstab/errors.hpp"
#include "lpstab/holder.hpp"
#include "lpstab/interpolation.hpp"
#include "lpstab/modulus.hpp"
#include "lpstab_cli/sweeps.hpp"

namespace lpstab::cli {

using nlohmann::json;

namespace {

std::string show(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

// Appends a violation unless a <= b within tol.inequality_rel * scale.
void expect_leq(ReportDocument& r, const Tolerance& tol, const std::string& check, double a,
                double b, double scale) {
  if (!tol.leq(a, b, scale) || std::isnan(a) || std::isnan(b)) {
    r.violations.push_back({check, show(a) + " > " + show(b)});
  }
}

void expect_sandwich(ReportDocument& r, const Tolerance& tol, const BoundReport& b, double scale,
                     const std::string& prefix = "") {
  expect_leq(r, tol, prefix + "lower<=actual", b.lower, b.actual, scale);
  expect_leq(r, tol, prefix + "actual<=upper", b.actual, b.upper, scale);
}

void expect_true(ReportDocument& r, bool ok, const std::string& check, const std::string& detail) {
  if (!ok) r.violations.push_back({check, detail});
}

ReportDocument start(const std::string& op, const InputDocument* in) {
  ReportDocument r;
  r.operation = op;
  r.input_digest = in != nullptr ? input_digest(*in) : "fnv1a64:" + fnv1a64_hex("");
  return r;
}

// The named function, or "g" in place of a missing default "h" so that
// two-function inputs written for holder also work for the pair commands.
SimpleFunction second_function(const InputDocument& in, const SpacePtr& space,
                               const std::string& name) {
  if (name == "h" && in.find("h") == nullptr && in.find("g") != nullptr) {
    return in.function(space, "g");
  }
  return in.function(space, name);
}

json values(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

}  // namespace

ReportDocument run_holder(const InputDocument& in, const HolderArgs& a, const Tolerance& tol) {
  ReportDocument r = start("holder", &in);
  const auto space = in.space();
  const auto f = in.function(space, a.f);
  const auto g = in.function(space, a.g);
  r.parameters["p"] = number(a.p);

  if (a.r) {
    if (a.c_lo || a.c_hi) throw InputError("--c-lo/--c-hi cannot be combined with --r");
    const double q = a.q ? *a.q : 1.0 / (1.0 / *a.r - 1.0 / a.p);
    r.parameters["q"] = number(q);
    r.parameters["r"] = number(*a.r);
    const auto b = holder_general(f, g, a.p, q, *a.r);
    const double n = quasi_norm(f, a.p) * quasi_norm(g, q);
    r.payload["mode"] = "general";
    r.payload["bound"] = to_json(b);
    r.payload["norm_product"] = number(n);
    expect_sandwich(r, tol, b, n);
    return r;
  }

  const auto [p, q] = conjugate(a.p);
  r.parameters["q"] = number(q);
  const double n = quasi_norm(f, p) * quasi_norm(g, q);
  const bool modified = a.c_lo || a.c_hi;
  const double c_lo = a.c_lo.value_or(1.0 / std::min(p, q));
  const double c_hi = a.c_hi.value_or(1.0 / std::max(p, q));
  if (modified) {
    r.parameters["c_lo"] = number(c_lo);
    r.parameters["c_hi"] = number(c_hi);
  }
  const auto b = modified ? holder_modified(f, g, p, c_lo, c_hi) : holder_report(f, g, p);
  r.payload["mode"] = modified ? "modified" : "refined";
  r.payload["bound"] = to_json(b);
  r.payload["norm_f_p"] = number(quasi_norm(f, p));
  r.payload["norm_g_q"] = number(quasi_norm(g, q));
  r.payload["norm_product"] = number(n);
  expect_sandwich(r, tol, b, n);

  if (a.drago) {
    const auto d = drago_bounds(f, g, p);
    r.payload["drago"] = {{"deficit", number(d.deficit)},
                          {"middle", number(d.middle)},
                          {"right", number(d.right)}};
    expect_leq(r, tol, "drago:0<=deficit", 0.0, d.deficit, 1.0);
    expect_leq(r, tol, "drago:deficit<=middle", d.deficit, d.middle, 1.0);
    expect_leq(r, tol, "drago:middle<=right", d.middle, d.right, 1.0);
  }
  if (a.pecaric) {
    const auto pe = pecaric_bounds(f, g, p);
    r.payload["pecaric"] = {{"left", number(pe.left)},
                            {"deficit", number(pe.deficit)},
                            {"right", number(pe.right)}};
    expect_leq(r, tol, "pecaric:left<=deficit", pe.left, pe.deficit, n);
    if (std::isfinite(pe.right)) expect_leq(r, tol, "pecaric:deficit<=right", pe.deficit, pe.right, n);
  }
  return r;
}

ReportDocument run_young(const InputDocument* in, const YoungArgs& a, const Tolerance& tol) {
  ReportDocument r = start("young", (a.u && a.v) ? nullptr : in);
  const auto [p, q] = conjugate(a.p);
  r.parameters["p"] = number(p);
  r.parameters["q"] = number(q);
  // For p > 2 the refinement is applied to (v, u) with exponent q.
  const bool swapped = p > 2.0;
  r.payload["swapped"] = swapped;

  auto one = [&](double u, double v) {
    const YoungGap y = swapped ? young_bounds(v, u, q) : young_bounds(u, v, p);
    const std::string where = "u=" + show(u) + ",v=" + show(v) + ":";
    expect_leq(r, tol, where + "lower<=gap", y.lower_rel, y.gap_rel, 1.0);
    expect_leq(r, tol, where + "gap<=upper", y.gap_rel, y.upper_rel, 1.0);
    return json{{"u", number(u)},         {"v", number(v)},
                {"gap", number(y.gap)},   {"lower", number(y.lower)},
                {"upper", number(y.upper)}, {"log_scale", number(y.log_scale)},
                {"gap_rel", number(y.gap_rel)}, {"lower_rel", number(y.lower_rel)},
                {"upper_rel", number(y.upper_rel)}};
  };

  if (a.u || a.v) {
    if (!(a.u && a.v)) throw InputError("young: --u and --v go together");
    r.parameters["u"] = number(*a.u);
    r.parameters["v"] = number(*a.v);
    r.payload["atoms"] = json::array({one(*a.u, *a.v)});
    return r;
  }
  if (in == nullptr) throw InputError("young: needs --u/--v or an input document");
  const auto space = in->space();
  const auto f = in->function(space, a.f);
  const auto g = in->function(space, a.g);
  json atoms = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) atoms.push_back(one(f.modulus(i), g.modulus(i)));
  r.payload["atoms"] = std::move(atoms);
  return r;
}

ReportDocument run_interp(const InputDocument& in, const InterpArgs& a, const Tolerance& tol) {
  ReportDocument r = start("interp", &in);
  r.parameters["r"] = number(a.r);
  r.parameters["s"] = number(a.s);
  const auto space = in.space();
  const auto f = in.function(space, a.f);
  const auto c = containment_bounds(f, a.r, a.s);
  const auto v = variance_bounds(f, a.r, a.s);
  const double ns = quasi_norm(f, a.s);
  r.payload["norm_s"] = number(ns);
  r.payload["containment"] = to_json(c);
  r.payload["variance"] = to_json(v);
  expect_sandwich(r, tol, c, ns, "containment:");
  expect_leq(r, tol, "containment:upper<=norm_s", c.upper, ns, ns);
  expect_sandwich(r, tol, v, ns, "variance:");
  expect_leq(r, tol, "variance:upper<=norm_s", v.upper, ns, ns);
  return r;
}

ReportDocument run_interp2(const InputDocument& in, const Interp2Args& a, const Tolerance& tol) {
  ReportDocument r = start("interp2", &in);
  const double p = a.p.value_or(0.5 * (a.p0 + a.p1));
  const auto params = InterpParams::from_exponents(a.p0, p, a.p1);
  r.parameters["p0"] = number(a.p0);
  r.parameters["p"] = number(p);
  r.parameters["p1"] = number(a.p1);
  r.parameters["t"] = number(params.t);
  const auto space = in.space();
  const auto f = in.function(space, a.f);
  const auto b = two_exponent_bounds(f, a.p0, p, a.p1);
  r.payload["bound"] = to_json(b);
  expect_sandwich(r, tol, b, b.actual);

  if (in.find(a.h) != nullptr) {
    const auto h = in.function(space, a.h);
    const auto d = midpoint_compare(f, h, a.p0, a.p1, tol);
    r.payload["midpoint"] = {
        {"p", number(d.params.p)},
        {"t", number(d.params.t)},
        {"f_norm_p0", number(d.f_norm_p0)},
        {"h_norm_p0", number(d.h_norm_p0)},
        {"f_norm_p1", number(d.f_norm_p1)},
        {"h_norm_p1", number(d.h_norm_p1)},
        {"f_norm_p", number(d.f_norm_p)},
        {"h_norm_p", number(d.h_norm_p)},
        {"f_theta_sq", number(d.f_theta_sq)},
        {"h_theta_sq", number(d.h_theta_sq)},
        {"f_chain", number(d.f_chain)},
        {"h_chain", number(d.h_chain)},
        {"p0_ordered", d.p0_ordered},
        {"p1_ordered", d.p1_ordered},
        {"angles_ordered", d.angles_ordered},
        {"asserted", d.asserted},
        {"conclusion_holds", d.conclusion_holds},
        {"strict_angle_diagnostic", d.strict_angle},
    };
    if (d.asserted) {
      expect_true(r, d.conclusion_holds, "midpoint:f_norm_p<=h_norm_p",
                  show(d.f_norm_p) + " > " + show(d.h_norm_p));
    }
  }
  return r;
}

ReportDocument run_minkowski(const InputDocument& in, const PairArgs& a, const Tolerance& tol) {
  ReportDocument r = start("minkowski", &in);
  r.parameters["p"] = number(a.p);
  const auto space = in.space();
  const auto f = in.function(space, a.f);
  const auto h = second_function(in, space, a.h);
  const auto result = refined_minkowski(f, h, a.p);
  if (const auto* deg = std::get_if<DegenerateSum>(&result)) {
    r.payload["degenerate_sum"] = true;
    r.payload["norm_f"] = number(deg->norm_f);
    r.payload["norm_h"] = number(deg->norm_h);
  } else {
    const auto& m = std::get<MinkowskiReport>(result);
    const double sum = m.norm_f + m.norm_h;
    r.payload["degenerate_sum"] = false;
    r.payload["bound"] = to_json(m.bound);
    r.payload["theta_sq_h"] = number(m.theta_sq_h);
    r.payload["norm_f"] = number(m.norm_f);
    r.payload["norm_h"] = number(m.norm_h);
    expect_sandwich(r, tol, m.bound, sum);
    expect_leq(r, tol, "upper<=norm_sum", m.bound.upper, sum, sum);
  }
  const auto tp = trianpos_bound(f, h, a.p);
  r.payload["trianpos"] = to_json(tp);
  const double sum = quasi_norm(f, a.p) + quasi_norm(h, a.p);
  expect_leq(r, tol, "trianpos:actual<=upper", tp.actual, tp.upper, sum);
  expect_leq(r, tol, "trianpos:upper<=norm_sum", tp.upper, sum, sum);
  return r;
}

ReportDocument run_cancel(const InputDocument& in, const PairArgs& a, const Tolerance& tol) {
  ReportDocument r = start("cancel", &in);
  r.parameters["p"] = number(a.p);
  r.parameters["t"] = number(a.t);
  const auto space = in.space();
  const auto f = in.function(space, a.f);
  const auto h = second_function(in, space, a.h);
  const auto c = sign_cancellation(f, h, a.p, a.t);
  r.payload["hypothesis_lhs"] = number(c.hypothesis_lhs);
  r.payload["hypothesis_rhs"] = number(c.hypothesis_rhs);
  r.payload["hypothesis_holds"] = c.hypothesis_holds;
  r.payload["actual"] = number(c.actual);
  r.payload["bound"] = number(c.bound);
  if (c.hypothesis_holds) {
    expect_true(r, tol.lt(c.actual, c.bound, c.bound), "actual<bound",
                show(c.actual) + " >= " + show(c.bound));
  }
  // Per-pair convexity bound on the normalized pair.
  if (a.p > 1.0 && !f.is_zero() && !h.is_zero()) {
    const auto fu = f.scaled(1.0 / quasi_norm(f, a.p));
    const auto hu = h.scaled(1.0 / quasi_norm(h, a.p));
    const auto k = conditional_midpoint_bounds(fu, hu, a.p, a.t, tol);
    r.payload["normalized"] = {
        {"regime", k.regime == Regime::kCancellation ? "cancellation" : "moduli"},
        {"distance", number(k.distance)},
        {"gap", number(k.gap)},
        {"bound", number(k.bound)},
    };
    expect_true(r, k.holds, "normalized:bound<=gap", show(k.bound) + " > " + show(k.gap));
  }
  return r;
}

ReportDocument run_convexity(const ConvexityArgs& a, const Tolerance& tol) {
  ReportDocument r = start("convexity", nullptr);
  r.parameters["p"] = number(a.p);
  r.parameters["eps"] = number(a.eps);
  r.parameters["t"] = number(a.t);
  r.parameters["seed"] = a.seed;
  r.parameters["restarts"] = a.restarts;
  r.parameters["dims"] = a.dims;
  r.parameters["iterations"] = a.iterations;

  SearchConfig cfg;
  cfg.seed = a.seed;
  cfg.restarts = a.restarts;
  cfg.max_iterations = a.iterations;
  const auto est = estimate_modulus(a.p, a.dims, a.eps, cfg);
  const double lower_t = delta_lower_bound(a.p, a.eps, a.t);
  r.payload["delta_estimate"] = number(est.delta_estimate);
  r.payload["lower_bound"] = number(est.proven_lower_bound);
  r.payload["lower_bound_at_t"] = number(lower_t);
  r.payload["two_point_upper"] = number(est.two_point_upper);
  r.payload["feasibility_error"] = number(est.feasibility_error);
  r.payload["f"] = values(est.f);
  r.payload["h"] = values(est.h);

  // Small-eps shapes: (p-1) eps^2 / 8 for p <= 2, eps^p / (p 2^p) for p >= 2.
  const double shape = a.p <= 2.0 ? (a.p - 1.0) * a.eps * a.eps / 8.0
                                  : std::pow(a.eps, a.p) / (a.p * std::pow(2.0, a.p));
  json diag = {{"small_eps_shape", number(shape)},
               {"estimate_over_shape", number(est.delta_estimate / shape)}};
  if (a.p <= 2.0) diag["asymptotic_c"] = number(delta_asymptotic_diagnostic(a.p, a.eps, a.c));
  r.payload["diagnostics"] = std::move(diag);

  expect_leq(r, tol, "lower_bound<=estimate", est.proven_lower_bound, est.delta_estimate + 1e-9, 1.0);
  expect_leq(r, tol, "lower_bound_at_t<=estimate", lower_t, est.delta_estimate + 1e-9, 1.0);
  expect_leq(r, tol, "estimate<=two_point_upper", est.delta_estimate, est.two_point_upper + 1e-9, 1.0);
  expect_true(r, est.feasibility_error <= 1e-8, "feasibility", show(est.feasibility_error));
  return r;
}

namespace {

struct Fixture {
  std::string name;
  std::string expected;
  json values;
  bool passed = false;
};

Fixture holder_example_pairing() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{1.0, 1.0});
  const SimpleFunction g(space, std::vector<double>{2.0, 0.0});
  const double p = 4.0 / 3.0;
  const double q = conjugate(p).q;
  const double pairing = inner_abs(f, g);
  const double gq = quasi_norm(g, q);
  const double expect_gq = std::pow(2.0, 1.0 - 1.0 / q);
  Fixture x{"holder_example_pairing", "int fg = 1 and ||g||_q = 2^{1-1/q}", {}, false};
  x.values = {{"pairing", number(pairing)}, {"norm_g_q", number(gq)},
              {"expected_norm_g_q", number(expect_gq)}};
  x.passed = std::abs(pairing - 1.0) <= 1e-12 && std::abs(gq - expect_gq) <= 1e-12;
  return x;
}

Fixture nogo_lower() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{1.0, 1.0});
  const SimpleFunction g(space, std::vector<double>{2.0, 0.0});
  const double p = 4.0 / 3.0;
  const auto b = holder_modified(f, g, p, 0.5, 1.0 / 4.0);
  Fixture x{"modified_lower_coefficient_half", "lower > actual (coefficient 1/2 is too small)",
            {}, false};
  x.values = {{"lower", number(b.lower)},
              {"actual", number(b.actual)},
              {"expected_lower", number(std::pow(2.0, 0.25))}};
  x.passed = b.lower > b.actual && std::abs(b.lower - std::pow(2.0, 0.25)) <= 1e-12;
  return x;
}

Fixture nogo_upper() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{2.0, 0.0});
  const SimpleFunction g(space, std::vector<double>{1.0, 1.0});
  const double p = 4.0 / 3.0;
  const auto b = holder_modified(f, g, p, 0.75, 0.5);
  Fixture x{"modified_upper_coefficient_half", "upper < actual (coefficient 1/2 is too large)",
            {}, false};
  x.values = {{"upper", number(b.upper)},
              {"actual", number(b.actual)},
              {"expected_upper", number(std::pow(2.0, -0.25))}};
  x.passed = b.upper < b.actual && std::abs(b.upper - std::pow(2.0, -0.25)) <= 1e-12;
  return x;
}

Fixture disjoint_support() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{1.0, 0.0});
  const SimpleFunction g(space, std::vector<double>{0.0, 1.0});
  const double p = 3.0;
  const auto b = holder_report(f, g, p);
  const double n = quasi_norm(f, p) * quasi_norm(g, conjugate(p).q);
  Fixture x{"disjoint_support", "theta^2 = 2, 0 = actual <= upper = N (1 - 2/max(p,q))", {}, false};
  x.values = {{"theta_sq", number(b.theta_sq)},
              {"actual", number(b.actual)},
              {"upper", number(b.upper)},
              {"expected_upper", number(n * (1.0 - 2.0 / p))},
              {"lower", number(b.lower)}};
  x.passed = b.theta_sq == 2.0 && b.actual == 0.0 && b.lower == 0.0 &&
             std::abs(b.upper - n * (1.0 - 2.0 / p)) <= 1e-12 * n;
  return x;
}

Fixture parallelogram() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{2.0, 1.0});
  const SimpleFunction g(space, std::vector<double>{1.0, 2.0});
  const auto b = holder_report(f, g, 2.0);
  const double n = quasi_norm(f, 2.0) * quasi_norm(g, 2.0);
  Fixture x{"parallelogram_p2", "lower = actual = upper at p = 2", {}, false};
  x.values = {{"lower", number(b.lower)}, {"actual", number(b.actual)}, {"upper", number(b.upper)}};
  x.passed = std::abs(b.upper - b.lower) <= 1e-10 * n && std::abs(b.actual - b.lower) <= 1e-10 * n;
  return x;
}

Fixture negative_bracket() {
  const auto space = MeasureSpace::create({0.01, 0.99});
  const SimpleFunction f(space, std::vector<double>{10.0, 0.0});
  const auto b = containment_bounds(f, 1.5, 2.0);
  Fixture x{"negative_bracket", "lower bracket -0.35 < 0, lower bound 0", {}, false};
  x.values = {{"lower_bracket", number(b.lower_bracket)},
              {"lower", number(b.lower)},
              {"actual", number(b.actual)},
              {"upper", number(b.upper)}};
  x.passed = std::abs(b.lower_bracket + 0.35) <= 1e-12 && b.lower == 0.0 &&
             b.positive_part_applied && b.holds(1e-12);
  return x;
}

struct MidpointPair {
  SimpleFunction f;
  GridFunction h;
};

MidpointPair midpoint_pair() {
  const auto halves = MeasureSpace::create({0.5, 0.5});
  return {SimpleFunction(halves, std::vector<double>{5.0 / 6.0, 0.0}),
          unit_interval_grid([](double x) { return x; }, 100000)};
}

Fixture midpoint_reversal() {
  const auto [f, h] = midpoint_pair();
  const double f1 = quasi_norm(f, 1.0), h1 = quasi_norm(h.f, 1.0);
  const double f6 = quasi_norm(f, 6.0), h6 = quasi_norm(h.f, 6.0);
  const double f6_exact = std::pow(std::pow(5.0 / 6.0, 6.0) / 2.0, 1.0 / 6.0);
  const double h6_exact = std::pow(1.0 / 7.0, 1.0 / 6.0);
  Fixture x{"midpoint_reversal_n6", "||f||_1 < ||h||_1 but ||f||_6 > ||h||_6", {}, false};
  x.values = {{"f_norm_1", number(f1)},         {"h_norm_1", number(h1)},
              {"f_norm_6", number(f6)},         {"h_norm_6", number(h6)},
              {"f_norm_6_exact", number(f6_exact)}, {"h_norm_6_exact", number(h6_exact)}};
  x.passed = f1 < h1 && f6 > h6 && std::abs(f6 / f6_exact - 1.0) <= 1e-3 &&
             std::abs(h6 / h6_exact - 1.0) <= 1e-3;
  return x;
}

Fixture midpoint_p1_11(const Tolerance& tol) {
  const auto [f, h] = midpoint_pair();
  const auto d = midpoint_compare(f, h.f, 1.0, 11.0, tol);
  Fixture x{"midpoint_p1_11",
            "endpoint norms ordered at 1 and 11, angle hypothesis fails, ||f||_6 > ||h||_6", {},
            false};
  x.values = {{"f_norm_p0", number(d.f_norm_p0)}, {"h_norm_p0", number(d.h_norm_p0)},
              {"f_norm_p1", number(d.f_norm_p1)}, {"h_norm_p1", number(d.h_norm_p1)},
              {"f_norm_p", number(d.f_norm_p)},   {"h_norm_p", number(d.h_norm_p)},
              {"f_theta_sq", number(d.f_theta_sq)}, {"h_theta_sq", number(d.h_theta_sq)},
              {"asserted", d.asserted}};
  x.passed = d.p0_ordered && d.p1_ordered && !d.angles_ordered && !d.asserted &&
             d.f_norm_p > d.h_norm_p;
  return x;
}

Fixture cancellation_example() {
  const auto space = MeasureSpace::create({0.5, 0.5});
  const SimpleFunction f(space, std::vector<double>{1.0, 1.0});
  const SimpleFunction h(space, std::vector<double>{-1.0, 1.0});
  const auto c = sign_cancellation(f, h, 2.0, 0.5);
  Fixture x{"sign_cancellation", "hypothesis holds, sqrt 2 = actual < bound = sqrt 3", {}, false};
  x.values = {{"actual", number(c.actual)}, {"bound", number(c.bound)}};
  x.passed = c.hypothesis_holds && c.actual < c.bound &&
             std::abs(c.actual - std::numbers::sqrt2) <= 1e-12 &&
             std::abs(c.bound - std::sqrt(3.0)) <= 1e-12;
  return x;
}

}  // namespace

ReportDocument run_fixtures(const Tolerance& tol) {
  ReportDocument r = start("fixtures", nullptr);
  const std::vector<Fixture> all = {
      holder_example_pairing(), nogo_lower(),          nogo_upper(),
      disjoint_support(),       parallelogram(),       negative_bracket(),
      midpoint_reversal(),      midpoint_p1_11(tol),   cancellation_example(),
  };
  json list = json::array();
  for (const auto& x : all) {
    list.push_back({{"name", x.name}, {"expected", x.expected}, {"passed", x.passed},
                    {"values", x.values}});
    expect_true(r, x.passed, x.name, "expected " + x.expected);
  }
  r.payload["fixtures"] = std::move(list);
  return r;
}

ReportDocument run_verify(const VerifyArgs& a, const Tolerance& tol) {
  ReportDocument r = start("verify", nullptr);
  r.parameters["seed"] = a.seed;
  r.parameters["cases"] = a.cases;
  r.parameters["rel_tol"] = number(tol.inequality_rel);
  json suites = json::array();
  for (const auto& s : run_all_suites(a.seed, a.cases, tol)) {
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"checked", s.checked},
                      {"failures", s.failures},
                      {"worst_margin", number(s.worst_margin)},
                      {"first_failure", s.first_failure}});
    if (s.failures > 0) {
      r.violations.push_back({s.name, std::to_string(s.failures) + " failures; " + s.first_failure});
    }
  }
  r.payload["suites"] = std::move(suites);
  return r;
}

}  // namespace lpstab::cli
