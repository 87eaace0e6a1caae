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

#include "lpstab/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <span>

#include <boost/math/tools/toms748_solve.hpp>

#include "lpstab/convexity.hpp"
#include "lpstab/errors.hpp"

namespace lpstab {

namespace {

using Vec = std::vector<double>;

// Uniform-weight p-norm, max-scaled.
double pnorm(std::span<const double> x, double p) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) {
    if (v != 0.0) s += std::pow(std::abs(v) / m, p);
  }
  return m * std::pow(s / static_cast<double>(x.size()), 1.0 / p);
}

Vec normalized(Vec x, double p) {
  const double n = pnorm(x, p);
  for (double& v : x) v /= n;
  return x;
}

Vec combine(double a, const Vec& x, double b, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

double distance(const Vec& f, const Vec& h, double p) { return pnorm(combine(1.0, f, -1.0, h), p); }

double midpoint_gap(const Vec& f, const Vec& h, double p) {
  return 1.0 - pnorm(combine(0.5, f, 0.5, h), p);
}

// Root of a continuous g on [lo, hi] with g(lo) < 0 <= g(hi).
template <class G>
double bracketed_root(G g, double lo, double hi) {
  const double glo = g(lo), ghi = g(hi);
  if (ghi == 0.0) return hi;
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      g, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (a + b);
}

// The point of the arc c(a) = normalize(cos a f + sin a dir), a in [0, pi],
// at distance eps from f. c runs from f to -f, so the distance goes from 0
// to 2 and a root exists for every eps in (0, 2].
Vec arc_partner(const Vec& f, const Vec& dir, double p, double eps) {
  auto arc = [&](double a) { return normalized(combine(std::cos(a), f, std::sin(a), dir), p); };
  if (eps >= 2.0) return combine(-1.0, f, 0.0, f);
  const double a = bracketed_root([&](double s) { return distance(f, arc(s), p) - eps; }, 0.0,
                                  std::numbers::pi);
  return arc(a);
}

// Component of y orthogonal (in the Euclidean sense) to f. Falls back to a
// coordinate direction when y is parallel to f.
Vec transverse(const Vec& f, const Vec& y) {
  double fy = 0.0, ff = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    fy += f[i] * y[i];
    ff += f[i] * f[i];
  }
  Vec d = combine(1.0, y, -fy / ff, f);
  double dd = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    dd += d[i] * d[i];
    yy += y[i] * y[i];
  }
  if (dd > 1e-20 * std::max(yy, 1e-300)) return d;
  const auto k = static_cast<std::size_t>(
      std::min_element(f.begin(), f.end(),
                       [](double a, double b) { return std::abs(a) < std::abs(b); }) -
      f.begin());
  Vec e(f.size(), 0.0);
  e[k] = 1.0;
  return combine(1.0, e, -f[k] / ff, f);
}

struct Pair {
  Vec f, h;
};

// The constraint is eliminated exactly: z = (x, y) in R^{2n} maps to the
// feasible pair f = x / ||x||, h = arc_partner(f, y - <y,f> f / <f,f>).
Pair decode(const Vec& z, std::size_t n, double p, double eps) {
  const Vec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  const Vec y(z.begin() + static_cast<std::ptrdiff_t>(n), z.end());
  Pair out;
  out.f = normalized(x, p);
  out.h = arc_partner(out.f, transverse(out.f, y), p, eps);
  return out;
}

double objective(const Vec& z, std::size_t n, double p, double eps) {
  const Pair pr = decode(z, n, p, eps);
  return midpoint_gap(pr.f, pr.h, p);
}

Vec gradient(const Vec& z, std::size_t n, double p, double eps) {
  Vec g(z.size());
  Vec w = z;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double step = 1e-6 * std::max(1.0, std::abs(z[i]));
    w[i] = z[i] + step;
    const double up = objective(w, n, p, eps);
    w[i] = z[i] - step;
    const double down = objective(w, n, p, eps);
    w[i] = z[i];
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// BFGS with backtracking on the reduced objective.
Vec local_descent(Vec z, std::size_t n, double p, double eps, int max_iterations) {
  const std::size_t m = z.size();
  std::vector<double> hinv(m * m, 0.0);
  auto reset = [&] {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) hinv[i * m + i] = 1.0;
  };
  reset();
  double fz = objective(z, n, p, eps);
  Vec g = gradient(z, n, p, eps);

  for (int it = 0; it < max_iterations; ++it) {
    Vec dir(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) dir[i] -= hinv[i * m + j] * g[j];
    }
    double slope = dot(dir, g);
    if (!(slope < 0.0)) {
      reset();
      dir = combine(-1.0, g, 0.0, g);
      slope = dot(dir, g);
      if (!(slope < 0.0)) break;
    }
    double step = 1.0;
    Vec trial;
    double ft = fz;
    bool accepted = false;
    for (int k = 0; k < 60; ++k, step *= 0.5) {
      trial = combine(1.0, z, step, dir);
      ft = objective(trial, n, p, eps);
      if (ft <= fz + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted || fz - ft <= 1e-17) {
      if (accepted && ft < fz) z = std::move(trial);
      break;
    }
    const Vec gt = gradient(trial, n, p, eps);
    const Vec s = combine(1.0, trial, -1.0, z);
    const Vec yv = combine(1.0, gt, -1.0, g);
    const double sy = dot(s, yv);
    if (sy > 1e-300) {
      // H <- (I - rho s y') H (I - rho y s') + rho s s'
      const double rho = 1.0 / sy;
      Vec hy(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) hy[i] += hinv[i * m + j] * yv[j];
      }
      const double yhy = dot(yv, hy);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          hinv[i * m + j] +=
              rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
      }
    }
    z = std::move(trial);
    fz = ft;
    g = gt;
  }
  return z;
}

Vec random_vector(std::mt19937_64& rng, std::size_t n) {
  // Box-Muller on raw 53-bit uniforms; independent of the standard
  // library's distribution implementations.
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  Vec x(n);
  for (double& v : x) {
    v = std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * std::numbers::pi * uniform());
  }
  return x;
}

void require_args(double p, double eps) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("modulus: p must lie in (1, inf)");
  if (!(eps > 0.0 && eps <= 2.0)) throw DomainError("modulus: eps must lie in (0, 2]");
}

struct Candidate {
  double delta = std::numeric_limits<double>::infinity();
  Pair pair;
};

}  // namespace

TwoPointPair two_point_minimizer(double p, double eps) {
  require_args(p, eps);
  auto unit = [p](double a) { return normalized(Vec{std::cos(a), std::sin(a)}, p); };
  // For f at angle a, the first point counter-clockwise at distance eps.
  auto partner = [&](double a, const Vec& f) {
    if (eps >= 2.0) return combine(-1.0, f, 0.0, f);
    const double off = bracketed_root(
        [&](double s) { return distance(f, unit(a + s), p) - eps; }, 0.0, std::numbers::pi);
    return unit(a + off);
  };
  auto value = [&](double a) {
    const Vec f = unit(a);
    return midpoint_gap(f, partner(a, f), p);
  };

  // The symmetry group of the l_p^2 circle has order 8, so a quarter turn of
  // f-angles covers every pair.
  constexpr int kGrid = 720;
  const double span = std::numbers::pi / 2.0;
  double best_a = 0.0, best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double a = span * i / kGrid;
    const double v = value(a);
    if (v < best_v) {
      best_v = v;
      best_a = a;
    }
  }
  // Golden-section refinement over the neighbouring grid cells.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_a - span / kGrid, hi = best_a + span / kGrid;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double v1 = value(x1), v2 = value(x2);
  for (int it = 0; it < 60; ++it) {
    if (v1 < v2) {
      hi = x2;
      x2 = x1;
      v2 = v1;
      x1 = hi - invphi * (hi - lo);
      v1 = value(x1);
    } else {
      lo = x1;
      x1 = x2;
      v1 = v2;
      x2 = lo + invphi * (hi - lo);
      v2 = value(x2);
    }
  }
  for (double a : {x1, x2}) {
    const double v = value(a);
    if (v < best_v) {
      best_v = v;
      best_a = a;
    }
  }
  const Vec f = unit(best_a);
  const Vec h = partner(best_a, f);
  TwoPointPair out;
  out.delta = midpoint_gap(f, h, p);
  out.f[0] = f[0];
  out.f[1] = f[1];
  out.h[0] = h[0];
  out.h[1] = h[1];
  return out;
}

ModulusEstimate estimate_modulus(double p, int n_dims, double eps, const SearchConfig& config) {
  require_args(p, eps);
  if (p > 1024.0) throw DomainError("modulus: p must not exceed 1024");
  if (n_dims < 2) throw DomainError("modulus: needs at least two dimensions");
  if (config.restarts < 1) throw DomainError("modulus: needs at least one restart");

  const auto n = static_cast<std::size_t>(n_dims);
  const TwoPointPair warm = two_point_minimizer(p, eps);

  auto run = [&](int k) {
    Vec z(2 * n, 0.0);
    if (k == 0 && config.warm_start) {
      // Embed the l_p^2 pair; (n/2)^{1/p} rescales weights 1/2 to 1/n.
      const double s = std::pow(static_cast<double>(n) / 2.0, 1.0 / p);
      for (std::size_t i = 0; i < 2; ++i) {
        z[i] = s * warm.f[i];
        z[n + i] = s * warm.h[i];
      }
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                        static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(k)};
      std::mt19937_64 rng(seq);
      z = random_vector(rng, 2 * n);
    }
    z = local_descent(std::move(z), n, p, eps, config.max_iterations);
    Candidate c;
    c.pair = decode(z, n, p, eps);
    c.delta = midpoint_gap(c.pair.f, c.pair.h, p);
    return c;
  };

  std::vector<Candidate> results(static_cast<std::size_t>(config.restarts));
  if (config.parallel) {
    std::vector<std::future<Candidate>> tasks;
    tasks.reserve(results.size());
    for (int k = 0; k < config.restarts; ++k) tasks.push_back(std::async(std::launch::async, run, k));
    for (std::size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k].get();
  } else {
    for (int k = 0; k < config.restarts; ++k) results[static_cast<std::size_t>(k)] = run(k);
  }

  // Ties resolve to the lowest restart index, independent of scheduling.
  const Candidate* best = &results.front();
  for (const auto& c : results) {
    if (c.delta < best->delta) best = &c;
  }

  ModulusEstimate est;
  est.p = p;
  est.n_dims = n_dims;
  est.eps = eps;
  est.delta_estimate = std::clamp(best->delta, 0.0, 1.0);
  est.proven_lower_bound = delta_lower_bound(p, eps);
  est.two_point_upper = warm.delta;
  est.search_seed = config.seed;
  est.restarts = config.restarts;
  est.feasibility_error = std::abs(distance(best->pair.f, best->pair.h, p) - eps);
  est.f = best->pair.f;
  est.h = best->pair.h;
  return est;
}

}  // namespace lpstab
