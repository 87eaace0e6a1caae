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

#include "lpstab/holder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpstab/errors.hpp"

namespace lpstab {

namespace {

double nonzero_norm(const SimpleFunction& f, double e, const char* what) {
  const double n = quasi_norm(f, e);
  if (n == 0.0) throw DomainError(std::string(what) + ": zero function");
  return n;
}

BoundReport sandwich(double scale, double actual, double theta2, double c_lo, double c_hi) {
  BoundReport r;
  r.actual = actual;
  r.theta_sq = theta2;
  r.angle_rad = angle_from_chord_sq(theta2);
  r.lower_coeff = c_lo;
  r.upper_coeff = c_hi;
  r.lower_bracket = 1.0 - c_lo * theta2;
  r.upper_bracket = 1.0 - c_hi * theta2;
  r.positive_part_applied = r.lower_bracket < 0.0;
  r.lower = scale * std::max(r.lower_bracket, 0.0);
  r.upper = scale * r.upper_bracket;
  return r;
}

void require_nonnegative_real(const SimpleFunction& f, const char* what) {
  if (f.is_complex()) throw DomainError(std::string(what) + ": needs real nonnegative values");
  for (double x : f.real_part()) {
    if (x < 0.0) throw DomainError(std::string(what) + ": needs nonnegative values");
  }
}

}  // namespace

double chord_sq(const SimpleFunction& a, double ea, const SimpleFunction& b, double eb) {
  require_same_space(a, b);
  const double na = nonzero_norm(a, ea, "chord_sq");
  const double nb = nonzero_norm(b, eb, "chord_sq");
  const auto w = a.space()->weights();
  double ratio = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a.modulus(i);
    const double y = b.modulus(i);
    if (x == 0.0 || y == 0.0) continue;
    ratio += w[i] * std::pow(x / na, 0.5 * ea) * std::pow(y / nb, 0.5 * eb);
  }
  return std::clamp(2.0 * (1.0 - ratio), 0.0, 2.0);
}

double angle_from_chord_sq(double theta_sq) {
  return std::acos(std::clamp(1.0 - 0.5 * theta_sq, -1.0, 1.0));
}

YoungGap young_bounds(double u, double v, double p) {
  if (!(p > 1.0 && p <= 2.0)) {
    throw DomainError("young_bounds: p must lie in (1, 2], got " + std::to_string(p));
  }
  if (!(u >= 0.0) || !(v >= 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
    throw DomainError("young_bounds: u and v must be finite and nonnegative");
  }
  const double q = p / (p - 1.0);
  YoungGap y;
  y.u = u;
  y.v = v;
  y.p = p;
  if (u == 0.0 && v == 0.0) return y;

  // Every term is homogeneous of degree one under
  // (u, v) -> (l^{1/p} u, l^{1/q} v), so divide through by max(u^p, v^q)
  // in log space.
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const double ln_u = u == 0.0 ? kNegInf : std::log(u);
  const double ln_v = v == 0.0 ? kNegInf : std::log(v);
  y.log_scale = std::max(p * ln_u, q * ln_v);
  const double a = std::exp(p * ln_u - y.log_scale);
  const double b = std::exp(q * ln_v - y.log_scale);
  const double uv = (u == 0.0 || v == 0.0) ? 0.0 : std::exp(ln_u + ln_v - y.log_scale);
  const double d = std::sqrt(a) - std::sqrt(b);
  y.gap_rel = a / p + b / q - uv;
  y.lower_rel = d * d / q;
  y.upper_rel = d * d / p;

  const double scale = std::exp(y.log_scale);
  y.gap = y.gap_rel * scale;
  y.lower = y.lower_rel * scale;
  y.upper = y.upper_rel * scale;
  return y;
}

double theta_sq(const SimpleFunction& f, const SimpleFunction& g, double p) {
  const auto [pp, q] = conjugate(p);
  return chord_sq(f, pp, g, q);
}

BoundReport holder_modified(const SimpleFunction& f, const SimpleFunction& g, double p,
                            double c_lo, double c_hi) {
  require_same_space(f, g);
  const auto [pp, q] = conjugate(p);
  const double nf = nonzero_norm(f, pp, "holder_report");
  const double ng = nonzero_norm(g, q, "holder_report");
  return sandwich(nf * ng, inner_abs(f, g), chord_sq(f, pp, g, q), c_lo, c_hi);
}

BoundReport holder_report(const SimpleFunction& f, const SimpleFunction& g, double p) {
  const auto [pp, q] = conjugate(p);
  return holder_modified(f, g, pp, 1.0 / std::min(pp, q), 1.0 / std::max(pp, q));
}

BoundReport holder_general(const SimpleFunction& f, const SimpleFunction& g, double p, double q,
                           double r) {
  if (!(r > 0.0) || !(p > r) || !(q > r) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("holder_general: need p, q > r > 0");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0 / r) > 1e-12) {
    throw DomainError("holder_general: exponents violate 1/p + 1/q = 1/r");
  }
  const double reduced = p / r;
  BoundReport rep = holder_report(f.abs_pow(r), g.abs_pow(r), reduced);
  const double root = 1.0 / r;
  rep.lower = std::pow(rep.lower, root);
  rep.actual = std::pow(rep.actual, root);
  rep.upper = std::pow(std::max(rep.upper, 0.0), root);
  return rep;
}

DragoBounds drago_bounds(const SimpleFunction& f, const SimpleFunction& g, double p) {
  require_same_space(f, g);
  const auto [pp, q] = conjugate(p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.modulus(i) > 0.0) || !(g.modulus(i) > 0.0)) {
      throw DomainError("drago_bounds: |f| and |g| must be strictly positive on every atom");
    }
  }
  const double nf = quasi_norm(f, pp);
  const double ng = quasi_norm(g, q);
  const auto w = f.space()->weights();
  // Normalized a = |f|/||f||_p, b = |g|/||g||_q. Replacing log|f| by log a
  // shifts the second factor by a constant, which integrates to zero against
  // a^p - b^q.
  double pairing = 0.0, middle = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f.modulus(i) / nf;
    const double b = g.modulus(i) / ng;
    const double la = std::log(a);
    const double lb = std::log(b);
    pairing += w[i] * a * b;
    middle += w[i] * (std::exp(pp * la) - std::exp(q * lb)) * (la / q - lb / pp);
    s1 += w[i] * std::exp((pp + 1.0 / q) * la - lb / pp);
    s2 += w[i] * std::exp((q + 1.0 / pp) * lb - la / q);
  }
  return {1.0 - pairing, middle, std::log(s1) + std::log(s2)};
}

PecaricBounds pecaric_bounds(const SimpleFunction& f, const SimpleFunction& g, double p) {
  require_same_space(f, g);
  if (!(p >= 2.0)) throw DomainError("pecaric_bounds: p must be >= 2");
  const auto [pp, q] = conjugate(p);
  require_nonnegative_real(f, "pecaric_bounds");
  require_nonnegative_real(g, "pecaric_bounds");
  const double nf = nonzero_norm(f, pp, "pecaric_bounds");
  const double ng = nonzero_norm(g, q, "pecaric_bounds");
  const double scale = nf * ng;
  const auto w = f.space()->weights();
  double pairing = 0.0, left = 0.0, right = 0.0;
  bool blows_up = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f.modulus(i) / nf;
    const double b = g.modulus(i) / ng;
    pairing += w[i] * a * b;
    const double dl = a - std::pow(b, q - 1.0);
    left += w[i] * std::pow(b, 2.0 - q) * dl * dl;
    const double dr = b - std::pow(a, pp - 1.0);
    if (a == 0.0 && pp > 2.0) {
      if (b > 0.0) blows_up = true;
      continue;
    }
    right += w[i] * std::pow(a, 2.0 - pp) * dr * dr;
  }
  PecaricBounds out;
  out.left = 0.5 * scale * left;
  out.deficit = scale * (1.0 - pairing);
  out.right = blows_up ? std::numeric_limits<double>::infinity() : 0.5 * scale * right;
  return out;
}

}  // namespace lpstab
