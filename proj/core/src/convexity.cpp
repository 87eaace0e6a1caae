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

#include "lpstab/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lpstab/errors.hpp"
#include "lpstab/holder.hpp"

namespace lpstab {

namespace {

void require_open_exponent(double p, const char* what) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError(std::string(what) + ": p must lie in (1, inf), got " + std::to_string(p));
  }
}

void require_t(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError(std::string(what) + ": t must lie in (0, 1)");
}

double nonzero_norm(const SimpleFunction& f, double p, const char* what) {
  const double n = quasi_norm(f, p);
  if (n == 0.0) throw DomainError(std::string(what) + ": zero function");
  return n;
}

void require_unit(const SimpleFunction& f, double p, const Tolerance& tol, const char* what) {
  if (std::abs(quasi_norm(f, p) - 1.0) > tol.equality_rel) {
    throw DomainError(std::string(what) + ": functions must have unit p-norm");
  }
}

// || |f| - |h| ||_p^p
double moduli_gap_pow(const SimpleFunction& f, const SimpleFunction& h, double p) {
  const auto w = f.space()->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = std::abs(f.modulus(i) - h.modulus(i));
    if (d != 0.0) sum += w[i] * std::pow(d, p);
  }
  return sum;
}

}  // namespace

SimpleFunction mazur_map(const SimpleFunction& f, double r, double s) {
  require_open_exponent(r, "mazur_map");
  require_open_exponent(s, "mazur_map");
  const double n = nonzero_norm(f, r, "mazur_map");
  const double e = r / s;
  if (!f.is_complex()) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = f.real_part()[i];
      out[i] = n * std::pow(std::abs(x) / n, e) * sign(x);
    }
    return SimpleFunction(f.space(), std::move(out));
  }
  std::vector<std::complex<double>> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = n * std::pow(f.modulus(i) / n, e) * sign(f[i]);
  }
  return SimpleFunction(f.space(), std::move(out));
}

std::variant<MinkowskiReport, DegenerateSum> refined_minkowski(const SimpleFunction& f,
                                                               const SimpleFunction& h,
                                                               double p) {
  require_same_space(f, h);
  const auto [pp, q] = conjugate(p);
  const double nf = nonzero_norm(f, pp, "refined_minkowski");
  const double nh = nonzero_norm(h, pp, "refined_minkowski");
  const SimpleFunction sum = f + h;
  const double ns = quasi_norm(sum, pp);
  if (ns == 0.0) return DegenerateSum{nf, nh};

  const double c = 1.0 / std::max(pp, q);
  MinkowskiReport out;
  out.norm_f = nf;
  out.norm_h = nh;
  out.theta_sq_h = chord_sq(sum, pp, h, pp);
  BoundReport& b = out.bound;
  b.theta_sq = chord_sq(sum, pp, f, pp);
  b.angle_rad = angle_from_chord_sq(b.theta_sq);
  b.actual = ns;
  b.lower = std::abs(nf - nh);
  b.upper = nf * (1.0 - c * b.theta_sq) + nh * (1.0 - c * out.theta_sq_h);
  b.upper_coeff = c;
  b.lower_bracket = 1.0;
  b.upper_bracket = b.upper / (nf + nh);
  return out;
}

BoundReport trianpos_bound(const SimpleFunction& f, const SimpleFunction& h, double p) {
  require_same_space(f, h);
  require_open_exponent(p, "trianpos_bound");
  const double nf = nonzero_norm(f, p, "trianpos_bound");
  const double nh = nonzero_norm(h, p, "trianpos_bound");
  const double gap = quasi_norm(f.abs().scaled(1.0 / nf) - h.abs().scaled(1.0 / nh), p);

  BoundReport b;
  if (p <= 2.0) {
    b.upper_coeff = p * (p - 1.0) / 8.0;
    b.upper_bracket = gap * gap;
  } else {
    b.upper_coeff = 1.0 / (2.0 * p);
    b.upper_bracket = std::pow(gap, p);
  }
  b.actual = quasi_norm(f + h, p);
  b.lower = std::abs(nf - nh);
  b.upper = nf + nh - std::min(nf, nh) * b.upper_coeff * b.upper_bracket;
  b.theta_sq = chord_sq(f, p, h, p);
  b.angle_rad = angle_from_chord_sq(b.theta_sq);
  b.lower_bracket = 1.0;
  return b;
}

PowerTriangleCheck power_triangle_lemma(const SimpleFunction& x, const SimpleFunction& y,
                                        const SimpleFunction& z, double p) {
  require_open_exponent(p, "power_triangle_lemma");
  PowerTriangleCheck c;
  c.lhs = std::pow(quasi_norm(x - y, p), p);
  c.rhs = std::pow(2.0, p - 1.0) *
          (std::pow(quasi_norm(x - z, p), p) + std::pow(quasi_norm(y - z, p), p));
  c.holds = c.lhs <= c.rhs * (1.0 + 1e-12);
  return c;
}

CancellationReport sign_cancellation(const SimpleFunction& f, const SimpleFunction& h, double p,
                                     double t) {
  require_same_space(f, h);
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("sign_cancellation: p must be >= 1");
  require_t(t, "sign_cancellation");
  if ((f.is_complex() || h.is_complex()) && p < 2.0) {
    throw UnsupportedCase("sign_cancellation: complex functions need p >= 2");
  }
  CancellationReport r;
  r.p = p;
  r.t = t;
  const SimpleFunction diff = f - h;
  const double diff_pow = integral_abs_pow(diff, p);
  r.hypothesis_lhs = moduli_gap_pow(f, h, p);
  r.hypothesis_rhs = t * diff_pow;
  r.hypothesis_holds = r.hypothesis_lhs < r.hypothesis_rhs;
  const double sum_norms = quasi_norm(f, p) + quasi_norm(h, p);
  r.bound = std::pow(std::pow(sum_norms, p) - (1.0 - t) * diff_pow, 1.0 / p);
  r.actual = quasi_norm(f + h, p);
  return r;
}

MidpointCheck taylor_midpoint(const SimpleFunction& f, const SimpleFunction& h, double p,
                              double t, const Tolerance& tol) {
  require_open_exponent(p, "taylor_midpoint");
  require_unit(f, p, tol, "taylor_midpoint");
  require_unit(h, p, tol, "taylor_midpoint");
  const CancellationReport c = sign_cancellation(f, h, p, t);
  if (!c.hypothesis_holds) {
    throw DomainError("taylor_midpoint: cancellation hypothesis does not hold for this t");
  }
  MidpointCheck m;
  m.lhs = 0.5 * c.actual;
  m.rhs = 1.0 - (1.0 - t) / (p * std::pow(2.0, p)) * integral_abs_pow(f - h, p);
  m.holds = tol.leq(m.lhs, m.rhs, 1.0);
  return m;
}

double delta_lower_bound(double p, double eps, double t) {
  require_open_exponent(p, "delta_lower_bound");
  if (!(eps > 0.0 && eps <= 2.0)) throw DomainError("delta_lower_bound: eps must lie in (0, 2]");
  require_t(t, "delta_lower_bound");
  if (p >= 2.0) return std::pow(eps, p) / (p * std::pow(2.0, p) + 4.0 * p);
  const double cancellation = (1.0 - t) * std::pow(eps, p) / (p * std::pow(2.0, p));
  const double moduli = std::pow(t, 2.0 / p) * p * (p - 1.0) * eps * eps / 16.0;
  return std::min(cancellation, moduli);
}

double delta_asymptotic_diagnostic(double p, double eps, double c) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("asymptotic bound needs 1 < p <= 2");
  if (!(c > 1.0)) throw DomainError("asymptotic bound needs c > 1");
  return p * (p - 1.0) * eps * eps / (16.0 * c);
}

ConditionalCheck conditional_midpoint_bounds(const SimpleFunction& f, const SimpleFunction& h,
                                             double p, double t, const Tolerance& tol) {
  require_same_space(f, h);
  require_open_exponent(p, "conditional_midpoint_bounds");
  require_t(t, "conditional_midpoint_bounds");
  if ((f.is_complex() || h.is_complex()) && p < 2.0) {
    throw UnsupportedCase("conditional_midpoint_bounds: complex functions need p >= 2");
  }
  require_unit(f, p, tol, "conditional_midpoint_bounds");
  require_unit(h, p, tol, "conditional_midpoint_bounds");

  ConditionalCheck c;
  const double diff_pow = integral_abs_pow(f - h, p);
  c.distance = std::pow(diff_pow, 1.0 / p);
  c.gap = 1.0 - 0.5 * quasi_norm(f + h, p);
  if (moduli_gap_pow(f, h, p) < t * diff_pow) {
    c.regime = Regime::kCancellation;
    c.bound = (1.0 - t) * diff_pow / (p * std::pow(2.0, p));
  } else if (p >= 2.0) {
    c.bound = t * diff_pow / (4.0 * p);
  } else {
    c.bound = std::pow(t, 2.0 / p) * p * (p - 1.0) * c.distance * c.distance / 16.0;
  }
  c.holds = tol.leq(c.bound, c.gap, 1.0);
  return c;
}

}  // namespace lpstab
