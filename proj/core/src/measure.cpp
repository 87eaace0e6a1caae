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

#include "lpstab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "lpstab/errors.hpp"

namespace lpstab {

namespace {

constexpr double kMassTolerance = 1e-12;

void require_exponent(double e, const char* what) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw DomainError(std::string(what) + ": exponent must be finite and positive, got " +
                      std::to_string(e));
  }
}

}  // namespace

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("measure space needs at least one atom");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw InputError("weight " + std::to_string(i) + " must be finite and > 0, got " +
                       std::to_string(w));
    }
  }
  total_mass_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

SpacePtr MeasureSpace::create(std::vector<double> weights) {
  return SpacePtr(new MeasureSpace(std::move(weights)));
}

SpacePtr MeasureSpace::uniform(std::size_t atoms, double total) {
  if (atoms == 0) throw InputError("uniform measure space needs at least one atom");
  return create(std::vector<double>(atoms, total / static_cast<double>(atoms)));
}

bool MeasureSpace::is_probability(double tol) const {
  return std::abs(total_mass_ - 1.0) <= tol;
}

bool MeasureSpace::same_as(const MeasureSpace& other) const {
  return this == &other || weights_ == other.weights_;
}

SimpleFunction::SimpleFunction(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), re_(std::move(values)) {
  validate();
}

SimpleFunction::SimpleFunction(SpacePtr space, std::vector<std::complex<double>> values)
    : space_(std::move(space)) {
  re_.reserve(values.size());
  im_.reserve(values.size());
  for (const auto& z : values) {
    re_.push_back(z.real());
    im_.push_back(z.imag());
  }
  validate();
}

SimpleFunction::SimpleFunction(SpacePtr space, std::vector<double> re, std::vector<double> im)
    : space_(std::move(space)), re_(std::move(re)), im_(std::move(im)) {
  validate();
}

void SimpleFunction::validate() const {
  if (!space_) throw InputError("function has no measure space");
  if (re_.size() != space_->size()) {
    throw InputError("function has " + std::to_string(re_.size()) + " values but the space has " +
                     std::to_string(space_->size()) + " atoms");
  }
  if (!im_.empty() && im_.size() != re_.size()) {
    throw InputError("real and imaginary parts differ in length");
  }
  for (std::size_t i = 0; i < re_.size(); ++i) {
    if (!std::isfinite(re_[i]) || (!im_.empty() && !std::isfinite(im_[i]))) {
      throw InputError("value " + std::to_string(i) + " is not finite");
    }
  }
}

SimpleFunction SimpleFunction::constant(SpacePtr space, double value) {
  const std::size_t n = space ? space->size() : 0;
  return SimpleFunction(std::move(space), std::vector<double>(n, value));
}

double SimpleFunction::max_modulus() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, modulus(i));
  return m;
}

bool SimpleFunction::is_zero() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (re_[i] != 0.0 || (!im_.empty() && im_[i] != 0.0)) return false;
  }
  return true;
}

SimpleFunction SimpleFunction::abs() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = modulus(i);
  return SimpleFunction(space_, std::move(out));
}

SimpleFunction SimpleFunction::abs_pow(double e) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const double m = modulus(i);
    out[i] = m == 0.0 ? 0.0 : std::pow(m, e);
  }
  return SimpleFunction(space_, std::move(out));
}

SimpleFunction SimpleFunction::scaled(double c) const {
  std::vector<double> re(re_), im(im_);
  for (auto& x : re) x *= c;
  for (auto& x : im) x *= c;
  return SimpleFunction(space_, std::move(re), std::move(im));
}

SimpleFunction SimpleFunction::scaled(std::complex<double> c) const {
  if (c.imag() == 0.0) return scaled(c.real());
  std::vector<std::complex<double>> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = c * (*this)[i];
  return SimpleFunction(space_, std::move(out));
}

SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b) {
  require_same_space(a, b);
  std::vector<double> re(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) re[i] = a.re_[i] + b.re_[i];
  if (!a.is_complex() && !b.is_complex()) return SimpleFunction(a.space_, std::move(re));
  std::vector<double> im(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) im[i] = a[i].imag() + b[i].imag();
  return SimpleFunction(a.space_, std::move(re), std::move(im));
}

SimpleFunction operator-(const SimpleFunction& a, const SimpleFunction& b) {
  return a + b.scaled(-1.0);
}

void require_same_space(const SimpleFunction& f, const SimpleFunction& g) {
  if (!f.space()->same_as(*g.space())) {
    throw InputError("functions live on different measure spaces");
  }
}

std::complex<double> sign(std::complex<double> z) {
  const double r = std::abs(z);
  return r == 0.0 ? std::complex<double>(1.0, 0.0) : z / r;
}

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

double quasi_norm(const SimpleFunction& f, double e) {
  require_exponent(e, "quasi_norm");
  const double m = f.max_modulus();
  if (m == 0.0) return 0.0;
  const auto w = f.space()->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.modulus(i);
    if (x != 0.0) sum += w[i] * std::pow(x / m, e);
  }
  return m * std::pow(sum, 1.0 / e);
}

double norm(const SimpleFunction& f, double p) {
  if (p == kInfinity) return f.max_modulus();
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("norm: p must lie in [1, inf], got " + std::to_string(p));
  }
  return quasi_norm(f, p);
}

double integral_abs_pow(const SimpleFunction& f, double e) {
  require_exponent(e, "integral_abs_pow");
  const auto w = f.space()->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.modulus(i);
    if (x != 0.0) sum += w[i] * std::pow(x, e);
  }
  return sum;
}

std::complex<double> inner(const SimpleFunction& f, const SimpleFunction& g) {
  require_same_space(f, g);
  const auto w = f.space()->weights();
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * f[i] * g[i];
  return sum;
}

double inner_abs(const SimpleFunction& f, const SimpleFunction& g) {
  require_same_space(f, g);
  const auto w = f.space()->weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * f.modulus(i) * g.modulus(i);
  return sum;
}

double normalized_variance(const SimpleFunction& f) {
  if (!f.space()->is_probability(kMassTolerance)) {
    throw DomainError("normalized_variance requires a probability space");
  }
  const double l2 = quasi_norm(f, 2.0);
  if (l2 == 0.0) throw DomainError("normalized_variance of the zero function");
  // Exact zero when |f| is constant; the ratio form leaves rounding residue.
  bool constant = true;
  for (std::size_t i = 1; i < f.size() && constant; ++i) constant = f.modulus(i) == f.modulus(0);
  if (constant) return 0.0;
  const double ratio = quasi_norm(f, 1.0) / l2;
  return std::clamp(1.0 - ratio * ratio, 0.0, 1.0);
}

ConjugateExponents conjugate(double p) {
  if (!std::isfinite(p) || !(p > 1.0) || p > 1024.0) {
    throw DomainError("conjugate: p must lie in (1, 1024], got " + std::to_string(p));
  }
  return {p, p / (p - 1.0)};
}

GridFunction unit_interval_grid(const std::function<double(double)>& rule, std::size_t n_atoms) {
  if (n_atoms == 0) throw InputError("unit_interval_grid needs at least one atom");
  auto space = MeasureSpace::uniform(n_atoms);
  std::vector<double> values(n_atoms);
  const double n = static_cast<double>(n_atoms);
  for (std::size_t i = 0; i < n_atoms; ++i) values[i] = rule((static_cast<double>(i) + 0.5) / n);
  SimpleFunction f(space, std::move(values));
  return {std::move(space), std::move(f)};
}

double dual_norm(const SimpleFunction& f, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("dual_norm: p must lie in (1, inf), got " + std::to_string(p));
  }
  const double np = norm(f, p);
  if (np == 0.0) throw DomainError("dual_norm of the zero function");
  const auto w = f.space()->weights();
  std::complex<double> pairing = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::complex<double> z = f[i];
    const double m = f.modulus(i);
    const std::complex<double> maximizer = std::pow(m / np, p - 1.0) * std::conj(sign(z));
    pairing += w[i] * z * maximizer;
  }
  return pairing.real();
}

}  // namespace lpstab
