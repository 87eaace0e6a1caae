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

#ifndef LPSTAB_MEASURE_HPP_
#define LPSTAB_MEASURE_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace lpstab {

/// Marker for the sup-norm in norm().
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class MeasureSpace;
using SpacePtr = std::shared_ptr<const MeasureSpace>;

/// A finite measure space: atoms with strictly positive masses.
///
/// Instances are immutable and shared between the functions defined on them.
class MeasureSpace {
 public:
  /// Throws InputError on an empty list, a non-finite or nonpositive weight.
  static SpacePtr create(std::vector<double> weights);
  /// n atoms of mass total/n each.
  static SpacePtr uniform(std::size_t atoms, double total = 1.0);

  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] std::span<const double> weights() const { return weights_; }
  [[nodiscard]] double weight(std::size_t i) const { return weights_[i]; }
  [[nodiscard]] double total_mass() const { return total_mass_; }

  /// True when the total mass is 1 to within `tol` (relative).
  [[nodiscard]] bool is_probability(double tol = 1e-12) const;

  /// Same object, or the same weights atom by atom.
  [[nodiscard]] bool same_as(const MeasureSpace& other) const;

 private:
  explicit MeasureSpace(std::vector<double> weights);

  std::vector<double> weights_;
  double total_mass_ = 0.0;
};

/// A function on a MeasureSpace: one real or complex value per atom.
///
/// Real functions keep an empty imaginary part; every operation that only
/// looks at moduli treats both kinds alike.
class SimpleFunction {
 public:
  SimpleFunction(SpacePtr space, std::vector<double> values);
  SimpleFunction(SpacePtr space, std::vector<std::complex<double>> values);

  static SimpleFunction constant(SpacePtr space, double value);

  [[nodiscard]] const SpacePtr& space() const { return space_; }
  [[nodiscard]] std::size_t size() const { return re_.size(); }
  [[nodiscard]] bool is_complex() const { return !im_.empty(); }
  [[nodiscard]] std::span<const double> real_part() const { return re_; }
  [[nodiscard]] std::span<const double> imag_part() const { return im_; }

  [[nodiscard]] std::complex<double> operator[](std::size_t i) const {
    return {re_[i], im_.empty() ? 0.0 : im_[i]};
  }
  [[nodiscard]] double modulus(std::size_t i) const {
    return im_.empty() ? std::abs(re_[i]) : std::hypot(re_[i], im_[i]);
  }
  [[nodiscard]] double max_modulus() const;
  [[nodiscard]] bool is_zero() const;

  /// |f| as a real function.
  [[nodiscard]] SimpleFunction abs() const;
  /// |f|^e as a real function; 0^e = 0 for e > 0.
  [[nodiscard]] SimpleFunction abs_pow(double e) const;
  [[nodiscard]] SimpleFunction scaled(double c) const;
  [[nodiscard]] SimpleFunction scaled(std::complex<double> c) const;

  friend SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b);
  friend SimpleFunction operator-(const SimpleFunction& a, const SimpleFunction& b);

 private:
  SimpleFunction(SpacePtr space, std::vector<double> re, std::vector<double> im);
  void validate() const;

  SpacePtr space_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// Throws InputError unless f and g live on the same measure space.
void require_same_space(const SimpleFunction& f, const SimpleFunction& g);

/// sign(z) = z/|z| with sign(0) := 1, so |sign| is identically 1.
[[nodiscard]] std::complex<double> sign(std::complex<double> z);
[[nodiscard]] double sign(double x);

/// Weighted p-norm, p in [1, inf]. kInfinity gives max |f_i|.
[[nodiscard]] double norm(const SimpleFunction& f, double p);

/// (sum w_i |f_i|^e)^{1/e} for any e > 0 (a quasi-norm when e < 1).
/// Evaluated with max-scaling, so large exponents do not overflow.
[[nodiscard]] double quasi_norm(const SimpleFunction& f, double e);

/// sum w_i |f_i|^e, e > 0.
[[nodiscard]] double integral_abs_pow(const SimpleFunction& f, double e);

/// sum w_i f_i g_i (no conjugation).
[[nodiscard]] std::complex<double> inner(const SimpleFunction& f, const SimpleFunction& g);

/// sum w_i |f_i| |g_i| = ||fg||_1.
[[nodiscard]] double inner_abs(const SimpleFunction& f, const SimpleFunction& g);

/// Var(|f| / ||f||_2) = 1 - (||f||_1 / ||f||_2)^2 on a probability space.
[[nodiscard]] double normalized_variance(const SimpleFunction& f);

struct ConjugateExponents {
  double p;
  double q;
};

/// (p, p/(p-1)) for p in (1, 1024].
[[nodiscard]] ConjugateExponents conjugate(double p);

struct GridFunction {
  SpacePtr space;
  SimpleFunction f;
};

/// Midpoint-rule discretization of a rule on [0,1]: atoms at (i + 1/2)/n,
/// each of mass 1/n.
[[nodiscard]] GridFunction unit_interval_grid(const std::function<double(double)>& rule,
                                              std::size_t n_atoms);

/// Evaluates the pairing int f g* with the explicit maximizer
/// g* = |f|^{p-1} conj(sign f) / ||f||_p^{p-1}; equals norm(f, p).
[[nodiscard]] double dual_norm(const SimpleFunction& f, double p);

}  // namespace lpstab

#endif  // LPSTAB_MEASURE_HPP_
