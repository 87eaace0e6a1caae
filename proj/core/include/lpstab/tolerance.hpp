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

#ifndef LPSTAB_TOLERANCE_HPP_
#define LPSTAB_TOLERANCE_HPP_

#include <algorithm>
#include <cmath>

namespace lpstab {

// Equalities are compared relatively; inequalities get an absolute slack of
// inequality_rel * scale, where scale is the natural size of the quantities
// (e.g. ||f||_p ||g||_q for Hoelder).
struct Tolerance {
  double equality_rel = 1e-10;
  double inequality_rel = 1e-12;

  [[nodiscard]] bool leq(double a, double b, double scale) const {
    return a <= b + inequality_rel * std::abs(scale);
  }
  [[nodiscard]] bool lt(double a, double b, double scale) const {
    return a < b + inequality_rel * std::abs(scale);
  }
  [[nodiscard]] bool close(double a, double b) const {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= equality_rel * scale;
  }
};

}  // namespace lpstab

#endif  // LPSTAB_TOLERANCE_HPP_
