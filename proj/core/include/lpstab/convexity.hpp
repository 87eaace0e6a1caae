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

#ifndef LPSTAB_CONVEXITY_HPP_
#define LPSTAB_CONVEXITY_HPP_

#include <variant>

#include "lpstab/bound_report.hpp"
#include "lpstab/measure.hpp"
#include "lpstab/tolerance.hpp"

namespace lpstab {

/// Mazur map L^r -> L^s: |f|^{r/s} sign f on the unit sphere, extended by
/// positive homogeneity, so ||mazur_map(f)||_s = ||f||_r. sign(0) := 1.
[[nodiscard]] SimpleFunction mazur_map(const SimpleFunction& f, double r, double s);

/// Refined triangle inequality
///   ||f+h||_p <= ||f||_p (1 - c theta_f^2) + ||h||_p (1 - c theta_h^2),
/// c = 1/max(p,q), where theta_f is the chord between |f+h|^{p/2} and
/// |f|^{p/2} (likewise theta_h). In `bound`, theta_sq is theta_f^2, lower
/// is the reverse triangle bound | ||f|| - ||h|| | and upper_bracket is
/// upper / (||f|| + ||h||).
struct MinkowskiReport {
  BoundReport bound;
  double theta_sq_h = 0.0;
  double norm_f = 0.0;
  double norm_h = 0.0;
};

/// f + h vanishes identically; the angles against f + h are undefined.
struct DegenerateSum {
  double norm_f = 0.0;
  double norm_h = 0.0;
};

[[nodiscard]] std::variant<MinkowskiReport, DegenerateSum> refined_minkowski(
    const SimpleFunction& f, const SimpleFunction& h, double p);

/// ||f+h||_p <= ||f|| + ||h|| - min(||f||, ||h||) * D with
///   D = p(p-1)/8 * || |f|/||f|| - |h|/||h|| ||_p^2        (1 < p <= 2)
///   D = 1/(2p)   * || |f|/||f|| - |h|/||h|| ||_p^p        (p >= 2).
/// upper_coeff holds the constant in front of the norm term, theta_sq the
/// chord between |f|^{p/2} and |h|^{p/2}.
[[nodiscard]] BoundReport trianpos_bound(const SimpleFunction& f, const SimpleFunction& h,
                                         double p);

struct PowerTriangleCheck {
  double lhs = 0.0;  // ||x - y||^p
  double rhs = 0.0;  // 2^{p-1} (||x - z||^p + ||y - z||^p)
  bool holds = false;
};

[[nodiscard]] PowerTriangleCheck power_triangle_lemma(const SimpleFunction& x,
                                                      const SimpleFunction& y,
                                                      const SimpleFunction& z, double p);

/// If || |f| - |h| ||_p^p < t ||f - h||_p^p then
///   ||f + h||_p < ((||f|| + ||h||)^p - (1-t) ||f - h||^p)^{1/p}.
/// Proven for real functions with p >= 1 and complex ones with p >= 2.
struct CancellationReport {
  double p = 0.0;
  double t = 0.0;
  double hypothesis_lhs = 0.0;  // || |f| - |h| ||_p^p
  double hypothesis_rhs = 0.0;  // t ||f - h||_p^p
  bool hypothesis_holds = false;
  double bound = 0.0;
  double actual = 0.0;
};

/// Throws UnsupportedCase for complex input with p < 2.
[[nodiscard]] CancellationReport sign_cancellation(const SimpleFunction& f,
                                                   const SimpleFunction& h, double p, double t);

struct MidpointCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// For unit f, h satisfying the cancellation hypothesis:
///   ||(f+h)/2||_p <= 1 - (1-t)/(p 2^p) ||f - h||_p^p.
/// Throws DomainError when the norms are not 1 or the hypothesis fails.
[[nodiscard]] MidpointCheck taylor_midpoint(const SimpleFunction& f, const SimpleFunction& h,
                                            double p, double t, const Tolerance& tol = {});

/// Unconditional lower bound for the modulus of convexity of real L^p:
///   p >= 2:      eps^p / (p 2^p + 4p)
///   1 < p < 2:   min{(1-t) eps^p / (p 2^p), t^{2/p} p (p-1) eps^2 / 16}.
[[nodiscard]] double delta_lower_bound(double p, double eps, double t = 0.5);

/// p(p-1) eps^2 / (16 c) for 1 < p <= 2 and c > 1. Only valid for eps below
/// an unquantified threshold depending on c; never asserted.
[[nodiscard]] double delta_asymptotic_diagnostic(double p, double eps, double c);

enum class Regime {
  kCancellation,  // || |f| - |h| ||^p < t ||f - h||^p
  kModuli,        // otherwise
};

struct ConditionalCheck {
  Regime regime = Regime::kModuli;
  double distance = 0.0;  // ||f - h||_p
  double gap = 0.0;       // 1 - ||(f+h)/2||_p
  double bound = 0.0;
  bool holds = false;
};

/// Per-pair lower bound on 1 - ||(f+h)/2||_p for unit f, h in the regime
/// the pair falls into:
///   cancellation: (1-t) eps^p / (p 2^p)
///   moduli, p >= 2: t eps^p / (4p)
///   moduli, p < 2:  t^{2/p} p (p-1) eps^2 / 16.
[[nodiscard]] ConditionalCheck conditional_midpoint_bounds(const SimpleFunction& f,
                                                           const SimpleFunction& h, double p,
                                                           double t, const Tolerance& tol = {});

}  // namespace lpstab

#endif  // LPSTAB_CONVEXITY_HPP_
