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

#ifndef LPSTAB_INTERPOLATION_HPP_
#define LPSTAB_INTERPOLATION_HPP_

#include "lpstab/bound_report.hpp"
#include "lpstab/measure.hpp"
#include "lpstab/tolerance.hpp"

namespace lpstab {

// Stability versions of ||f||_r <= ||f||_s on probability spaces and of the
// log-convexity of p -> ||f||_p. Every bound is a refined Hoelder sandwich
// in disguise; the two branches of each statement (s <= 2r vs s >= 2r, and
// the conjugate-exponent ordering for the two-exponent form) are folded into
// a single max/min coefficient assignment.

/// Exponents p0 < p < p1 and the interpolation parameter t defined by
/// 1/p = (1-t)/p0 + t/p1. t is always derived, never supplied.
struct InterpParams {
  double p0 = 0.0;
  double p = 0.0;
  double p1 = 0.0;
  double t = 0.0;

  static InterpParams from_exponents(double p0, double p, double p1);
};

/// Sandwich for ||f||_r from ||f||_s and the angle between |f|^{s/2} and 1:
///   ||f||_s [1 - c_lo (1 - ratio)]_+^{1/r} <= ||f||_r
///                                          <= ||f||_s [1 - c_hi (1 - ratio)]^{1/r}
/// with ratio = || |f|^{s/2} ||_1 / || |f|^{s/2} ||_2 and
/// {c_lo, c_hi} = {max, min} of {2r/s, 2(s-r)/s}. Requires a probability space.
[[nodiscard]] BoundReport containment_bounds(const SimpleFunction& f, double r, double s);

/// Same sandwich expressed through V = Var(|f|^{s/2} / || |f|^{s/2} ||_2)
/// using V/2 <= 1 - ratio <= V: the lower coefficient is unchanged and the
/// upper one is halved.
[[nodiscard]] BoundReport variance_bounds(const SimpleFunction& f, double r, double s);

/// Sandwich for ||f||_p between ||f||_{p0}^{1-t} ||f||_{p1}^t times a
/// bracket driven by the angle between |f|^{p0/2} and |f|^{p1/2}. Any
/// measure space.
[[nodiscard]] BoundReport two_exponent_bounds(const SimpleFunction& f, double p0, double p,
                                              double p1);

/// Outcome of comparing ||f||_p and ||h||_p at the midpoint p = (p0+p1)/2.
///
/// When ||f||_{p0} <= ||h||_{p0}, ||f||_{p1} <= ||h||_{p1} and the h-angle
/// does not exceed the f-angle, ||f||_p <= ||h||_p follows and `asserted`
/// is set. f and h may live on different measure spaces.
struct MidpointDecision {
  InterpParams params;
  double f_norm_p0 = 0.0;
  double h_norm_p0 = 0.0;
  double f_norm_p1 = 0.0;
  double h_norm_p1 = 0.0;
  double f_norm_p = 0.0;
  double h_norm_p = 0.0;
  double f_theta_sq = 0.0;
  double h_theta_sq = 0.0;
  // ||.||_{p0}^{1-t} ||.||_{p1}^t [1 - theta^2/2]^{1/p}; equal to ||.||_p at
  // the midpoint, where both conjugate exponents are 2.
  double f_chain = 0.0;
  double h_chain = 0.0;
  bool p0_ordered = false;
  bool p1_ordered = false;
  bool angles_ordered = false;
  bool asserted = false;
  bool conclusion_holds = false;
  // Strict angle inequality: ||f||_p < ||h||_p near the midpoint as well.
  // Reported only; the neighbourhood is not quantified.
  bool strict_angle = false;
};

[[nodiscard]] MidpointDecision midpoint_compare(const SimpleFunction& f, const SimpleFunction& h,
                                                double p0, double p1,
                                                const Tolerance& tol = {});

}  // namespace lpstab

#endif  // LPSTAB_INTERPOLATION_HPP_
