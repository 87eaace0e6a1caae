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

#include "lpstab_cli/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace lpstab::cli {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

// std::uniform_real_distribution is implementation-defined; this keeps
// streams identical across standard libraries.
double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Sampler::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

bool Sampler::coin(double probability) { return uniform(0.0, 1.0) < probability; }

std::size_t Sampler::atoms(std::size_t max_atoms) {
  return 1 + static_cast<std::size_t>(rng_() % max_atoms);
}

SpacePtr Sampler::space(std::size_t n, bool probability) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = log_uniform(1e-3, 1e3);
    total += x;
  }
  if (probability) {
    for (double& x : w) x /= total;
  }
  return MeasureSpace::create(std::move(w));
}

SimpleFunction Sampler::real_function(const SpacePtr& space, bool signed_values, double lo,
                                      double hi) {
  std::vector<double> v(space->size());
  bool any = false;
  for (double& x : v) {
    if (coin(1.0 / 16.0)) {
      x = 0.0;
      continue;
    }
    x = log_uniform(lo, hi);
    if (signed_values && coin()) x = -x;
    any = true;
  }
  if (!any) v[0] = log_uniform(lo, hi);
  return SimpleFunction(space, std::move(v));
}

SimpleFunction Sampler::complex_function(const SpacePtr& space, double lo, double hi) {
  std::vector<std::complex<double>> v(space->size());
  for (auto& z : v) z = std::polar(log_uniform(lo, hi), uniform(0.0, 2.0 * std::numbers::pi));
  return SimpleFunction(space, std::move(v));
}

SimpleFunction Sampler::sign_variant(const SimpleFunction& f, double jitter) {
  const std::size_t n = f.size();
  if (f.is_complex()) {
    std::vector<std::complex<double>> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double turn = coin() ? uniform(0.0, 2.0 * std::numbers::pi) : 0.0;
      v[i] = f[i] * std::polar(1.0 + uniform(-jitter, jitter), turn);
    }
    return SimpleFunction(f.space(), std::move(v));
  }
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double flip = coin() ? -1.0 : 1.0;
    v[i] = flip * f.real_part()[i] * (1.0 + uniform(-jitter, jitter));
  }
  return SimpleFunction(f.space(), std::move(v));
}

}  // namespace lpstab::cli
