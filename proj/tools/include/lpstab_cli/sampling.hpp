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

#ifndef LPSTAB_CLI_SAMPLING_HPP_
#define LPSTAB_CLI_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "lpstab/measure.hpp"

namespace lpstab::cli {

/// Deterministic random inputs for property sweeps. Each (seed, stream)
/// pair gives an independent sequence.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream);

  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  bool coin(double probability = 0.5);
  /// 1..max_atoms inclusive.
  std::size_t atoms(std::size_t max_atoms = 64);

  /// Log-uniform weights in [1e-3, 1e3], rescaled to total mass 1 when
  /// `probability` is set.
  SpacePtr space(std::size_t n, bool probability);
  /// Values log-uniform in [lo, hi]; random sign when `signed_values`; about
  /// one atom in 16 set to zero, but never all of them.
  SimpleFunction real_function(const SpacePtr& space, bool signed_values, double lo = 1e-3,
                               double hi = 1e3);
  /// Moduli log-uniform in [lo, hi] with uniform phases.
  SimpleFunction complex_function(const SpacePtr& space, double lo = 1e-3, double hi = 1e3);
  /// A copy of f with some signs (or phases) flipped and moduli perturbed
  /// by a relative amount up to `jitter`. Useful for hitting the
  /// cancellation regime.
  SimpleFunction sign_variant(const SimpleFunction& f, double jitter);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace lpstab::cli

#endif  // LPSTAB_CLI_SAMPLING_HPP_
