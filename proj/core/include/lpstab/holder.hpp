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

#ifndef LPSTAB_HOLDER_HPP_
#define LPSTAB_HOLDER_HPP_

#include "lpstab/bound_report.hpp"
#include "lpstab/measure.hpp"

namespace lpstab {

/// Squared L^2 chord between the unit vectors |a|^{ea/2} / || . ||_2 and
/// |b|^{eb/2} / || . ||_2, computed as 2(1 - <u, v>) and clamped to [0, 2].
///
/// With (ea, eb) = (p, q) this is the Hoelder angle of f and g; with
/// (p, p) it compares two elements of L^p. Throws DomainError if either
/// function is zero.
[[nodiscard]] double chord_sq(const SimpleFunction& a, double ea, const SimpleFunction& b,
                              double eb);

/// arccos(1 - theta_sq / 2).
[[nodiscard]] double angle_from_chord_sq(double theta_sq);

struct YoungGap {
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
  double gap = 0.0;    // u^p/p + v^q/q - uv
  double lower = 0.0;  // (1/q) (u^{p/2} - v^{q/2})^2
  double upper = 0.0;  // (1/p) (u^{p/2} - v^{q/2})^2

  // The same three quantities divided by S = max(u^p, v^q), with
  // log_scale = ln S. They stay finite when u^p or v^q overflow, so
  // checks should use these.
  double log_scale = 0.0;
  double gap_rel = 0.0;
  double lower_rel = 0.0;
  double upper_rel = 0.0;
};

/// Two-sided refinement of Young's inequality for 1 < p <= 2. For p > 2
/// call with (v, u, q) instead.
[[nodiscard]] YoungGap young_bounds(double u, double v, double p);

/// Hoelder angle theta^2(|f|^{p/2}, |g|^{q/2}), q = p/(p-1).
[[nodiscard]] double theta_sq(const SimpleFunction& f, const SimpleFunction& g, double p);

/// Refined Hoelder sandwich for ||fg||_1:
///   N (1 - theta^2 / min(p,q))_+ <= ||fg||_1 <= N (1 - theta^2 / max(p,q)),
/// N = ||f||_p ||g||_q.
[[nodiscard]] BoundReport holder_report(const SimpleFunction& f, const SimpleFunction& g,
                                        double p);

/// Same formulas with caller-chosen coefficients. The result need not be a
/// valid sandwich; it exists to show which coefficient changes break it.
[[nodiscard]] BoundReport holder_modified(const SimpleFunction& f, const SimpleFunction& g,
                                          double p, double c_lo, double c_hi);

/// Sandwich for ||fg||_r <= ||f||_p ||g||_q with 1/p + 1/q = 1/r, obtained
/// by applying holder_report to |f|^r, |g|^r with exponents p/r, q/r. The
/// positive part is taken before the r-th root.
[[nodiscard]] BoundReport holder_general(const SimpleFunction& f, const SimpleFunction& g,
                                         double p, double q, double r);

/// Deficit chain 0 <= deficit <= middle <= right for the normalized
/// deficit 1 - (|f|,|g|) / (||f||_p ||g||_q). Needs strictly positive
/// moduli (logarithms and negative powers appear).
struct DragoBounds {
  double deficit = 0.0;
  double middle = 0.0;
  double right = 0.0;
};
[[nodiscard]] DragoBounds drago_bounds(const SimpleFunction& f, const SimpleFunction& g,
                                       double p);

/// left <= ||f||_p ||g||_q - ||fg||_1 <= right for nonnegative f, g and
/// p >= 2. `right` is +infinity when p > 2 and supp g is not inside supp f.
struct PecaricBounds {
  double left = 0.0;
  double deficit = 0.0;
  double right = 0.0;
};
[[nodiscard]] PecaricBounds pecaric_bounds(const SimpleFunction& f, const SimpleFunction& g,
                                           double p);

}  // namespace lpstab

#endif  // LPSTAB_HOLDER_HPP_
