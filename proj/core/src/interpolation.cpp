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

#include "lpstab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpstab/errors.hpp"
#include "lpstab/holder.hpp"

namespace lpstab {

namespace {

void require_containment_args(const SimpleFunction& f, double r, double s, const char* what) {
  if (!f.space()->is_probability(1e-12)) {
    throw DomainError(std::string(what) + ": requires a probability space");
  }
  if (!(r > 0.0) || !(s > r) || !std::isfinite(s)) {
    throw DomainError(std::string(what) + ": need 0 < r < s < inf");
  }
  if (f.is_zero()) throw DomainError(std::string(what) + ": zero function");
}

// theta^2 between |f|^{s/2} and the constant 1 (a unit vector on a
// probability space), i.e. 2 (1 - ratio).
double angle_to_constant(const SimpleFunction& f, double s) {
  return chord_sq(f, s, SimpleFunction::constant(f.space(), 1.0), 2.0);
}

BoundReport root_sandwich(double scale, double actual, double theta2, double c_lo, double c_hi,
                          double dispersion, double root) {
  BoundReport rep;
  rep.actual = actual;
  rep.theta_sq = theta2;
  rep.angle_rad = angle_from_chord_sq(theta2);
  rep.lower_coeff = c_lo;
  rep.upper_coeff = c_hi;
  rep.lower_bracket = 1.0 - c_lo * dispersion;
  rep.upper_bracket = 1.0 - c_hi * dispersion;
  rep.positive_part_applied = rep.lower_bracket < 0.0;
  rep.lower = scale * std::pow(std::max(rep.lower_bracket, 0.0), root);
  rep.upper = scale * std::pow(std::max(rep.upper_bracket, 0.0), root);
  return rep;
}

}  // namespace

InterpParams InterpParams::from_exponents(double p0, double p, double p1) {
  if (!(p0 > 0.0) || !(p > p0) || !(p1 > p) || !std::isfinite(p1)) {
    throw DomainError("interpolation exponents must satisfy 0 < p0 < p < p1 < inf");
  }
  InterpParams out;
  out.p0 = p0;
  out.p = p;
  out.p1 = p1;
  out.t = (1.0 / p0 - 1.0 / p) / (1.0 / p0 - 1.0 / p1);
  return out;
}

BoundReport containment_bounds(const SimpleFunction& f, double r, double s) {
  require_containment_args(f, r, s, "containment_bounds");
  const double a = 2.0 * r / s;
  const double b = 2.0 * (s - r) / s;
  const double theta2 = angle_to_constant(f, s);
  return root_sandwich(quasi_norm(f, s), quasi_norm(f, r), theta2, std::max(a, b),
                       std::min(a, b), 0.5 * theta2, 1.0 / r);
}

BoundReport variance_bounds(const SimpleFunction& f, double r, double s) {
  require_containment_args(f, r, s, "variance_bounds");
  const double a = 2.0 * r / s;
  const double b = 2.0 * (s - r) / s;
  // V is scale invariant; normalize first so |f|^{s/2} cannot overflow.
  const double var = normalized_variance(f.scaled(1.0 / f.max_modulus()).abs_pow(0.5 * s));
  return root_sandwich(quasi_norm(f, s), quasi_norm(f, r), angle_to_constant(f, s),
                       std::max(a, b), 0.5 * std::min(a, b), var, 1.0 / r);
}

BoundReport two_exponent_bounds(const SimpleFunction& f, double p0, double p, double p1) {
  const InterpParams ip = InterpParams::from_exponents(p0, p, p1);
  if (f.is_zero()) throw DomainError("two_exponent_bounds: zero function");
  const double t = ip.t;
  const double denom = (1.0 - t) * p1 + t * p0;
  const double a = 2.0 * (1.0 - t) * p1 / denom;
  const double b = 2.0 * t * p0 / denom;
  const double theta2 = chord_sq(f, p0, f, p1);
  const double scale = std::pow(quasi_norm(f, p0), 1.0 - t) * std::pow(quasi_norm(f, p1), t);
  return root_sandwich(scale, quasi_norm(f, p), theta2, std::max(a, b), std::min(a, b),
                       0.5 * theta2, 1.0 / p);
}

MidpointDecision midpoint_compare(const SimpleFunction& f, const SimpleFunction& h, double p0,
                                  double p1, const Tolerance& tol) {
  if (f.is_zero() || h.is_zero()) throw DomainError("midpoint_compare: zero function");
  MidpointDecision d;
  d.params = InterpParams::from_exponents(p0, 0.5 * (p0 + p1), p1);
  const double p = d.params.p;
  const double t = d.params.t;

  d.f_norm_p0 = quasi_norm(f, p0);
  d.h_norm_p0 = quasi_norm(h, p0);
  d.f_norm_p1 = quasi_norm(f, p1);
  d.h_norm_p1 = quasi_norm(h, p1);
  d.f_norm_p = quasi_norm(f, p);
  d.h_norm_p = quasi_norm(h, p);
  d.f_theta_sq = chord_sq(f, p0, f, p1);
  d.h_theta_sq = chord_sq(h, p0, h, p1);

  auto chain = [&](double n0, double n1, double theta2) {
    return std::pow(n0, 1.0 - t) * std::pow(n1, t) * std::pow(1.0 - 0.5 * theta2, 1.0 / p);
  };
  d.f_chain = chain(d.f_norm_p0, d.f_norm_p1, d.f_theta_sq);
  d.h_chain = chain(d.h_norm_p0, d.h_norm_p1, d.h_theta_sq);

  d.p0_ordered = d.f_norm_p0 <= d.h_norm_p0;
  d.p1_ordered = d.f_norm_p1 <= d.h_norm_p1;
  d.angles_ordered = d.h_theta_sq <= d.f_theta_sq;
  d.asserted = d.p0_ordered && d.p1_ordered && d.angles_ordered;
  d.conclusion_holds = d.f_norm_p <= d.h_norm_p * (1.0 + tol.equality_rel);
  d.strict_angle = d.h_theta_sq < d.f_theta_sq;
  return d;
}

}  // namespace lpstab
