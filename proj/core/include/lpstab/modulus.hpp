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

#ifndef LPSTAB_MODULUS_HPP_
#define LPSTAB_MODULUS_HPP_

#include <cstdint>
#include <vector>

namespace lpstab {

// Numerical estimate of the modulus of convexity of l_p^n (uniform weights),
//   delta(eps) = inf { 1 - ||(f+h)/2||_p : ||f|| = ||h|| = 1, ||f - h|| = eps },
// over real vectors. Every value reported comes from an exactly feasible
// pair, so it is an upper estimate of the infimum.

struct SearchConfig {
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iterations = 2000;
  /// Restart 0 starts from the best two-coordinate pair.
  bool warm_start = true;
  /// Run restarts as concurrent tasks. Results do not depend on this.
  bool parallel = true;
};

struct ModulusEstimate {
  double p = 0.0;
  int n_dims = 0;
  double eps = 0.0;
  double delta_estimate = 0.0;
  /// delta_lower_bound(p, eps) at t = 1/2.
  double proven_lower_bound = 0.0;
  /// Minimum over the full one-parameter family of eps-separated pairs on
  /// the unit circle of l_p^2.
  double two_point_upper = 0.0;
  std::uint64_t search_seed = 0;
  int restarts = 0;
  /// | ||f - h|| - eps | at the reported pair.
  double feasibility_error = 0.0;
  /// Coordinates of the best pair found.
  std::vector<double> f;
  std::vector<double> h;
};

/// Best eps-separated pair on the unit circle of l_p^2 (weights 1/2).
struct TwoPointPair {
  double delta = 0.0;
  double f[2] = {0.0, 0.0};
  double h[2] = {0.0, 0.0};
};

/// Scalar search over the angle of f; h is root-found on the circle so that
/// ||f - h|| = eps. Throws DomainError for p outside (1, inf) or eps outside
/// (0, 2].
[[nodiscard]] TwoPointPair two_point_minimizer(double p, double eps);

/// Throws DomainError on p outside (1, 1024], n_dims < 2, eps outside (0, 2].
[[nodiscard]] ModulusEstimate estimate_modulus(double p, int n_dims, double eps,
                                               const SearchConfig& config = {});

}  // namespace lpstab

#endif  // LPSTAB_MODULUS_HPP_
