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

#ifndef LPSTAB_BOUND_REPORT_HPP_
#define LPSTAB_BOUND_REPORT_HPP_

namespace lpstab {

/// A two-sided estimate lower <= actual <= upper together with the angle
/// that drives it.
///
/// The brackets are the factors before the positive part and the final root
/// are applied, e.g. for refined Hoelder lower = N * (lower_bracket)_+.
/// theta_sq is the squared chord between the two unit vectors in L^2 and
/// angle_rad = arccos(1 - theta_sq / 2).
struct BoundReport {
  double lower = 0.0;
  double actual = 0.0;
  double upper = 0.0;
  double theta_sq = 0.0;
  double angle_rad = 0.0;
  double lower_coeff = 0.0;
  double upper_coeff = 0.0;
  double lower_bracket = 0.0;
  double upper_bracket = 0.0;
  /// Set when lower_bracket was negative and clamped to 0.
  bool positive_part_applied = false;

  [[nodiscard]] double lower_slack() const { return actual - lower; }
  [[nodiscard]] double upper_slack() const { return upper - actual; }
  [[nodiscard]] double width() const { return upper - lower; }

  /// lower <= actual <= upper with absolute slack `abs_slack`.
  [[nodiscard]] bool holds(double abs_slack) const {
    return lower <= actual + abs_slack && actual <= upper + abs_slack;
  }
};

}  // namespace lpstab

#endif  // LPSTAB_BOUND_REPORT_HPP_
