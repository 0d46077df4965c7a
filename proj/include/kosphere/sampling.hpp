/**
 * @brief Exact rational sampling of bilinear maps on shifted unit spheres.
 *
 * Points on ||x||^2 = 2 x_1 come from inverse stereographic projection of random rational
 * parameters, shifted by e_1. All arithmetic is exact.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bilinear.hpp"

namespace kosphere {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

namespace detail {
/// Portable small rational p/q with |p| <= 9, 1 <= q <= 9.
inline Rational small_rational(std::mt19937_64 &rng) {
  std::int64_t p = static_cast<std::int64_t>(rng() % 19) - 9;
  std::int64_t q = static_cast<std::int64_t>(rng() % 9) + 1;
  return Rational(p, q);
}
} // namespace detail

inline Rational squared_norm(const RationalVector &v) {
  Rational s = 0;
  for (const auto &x : v)
    s += x * x;
  return s;
}

/// Rational point of R^{dim} on the sphere ||x||^2 = 2 x_1 (dim >= 1). The chart sends the
/// origin to infinity, so the degenerate point 0 is never drawn; for dim 1 this yields 2.
inline RationalVector shifted_sphere_point(int dim, std::mt19937_64 &rng) {
  RationalVector t(dim - 1);
  for (auto &x : t)
    x = detail::small_rational(rng);
  Rational s = squared_norm(t);
  RationalVector u(dim);
  u[0] = 2 / (s + 1);
  for (int i = 1; i < dim; ++i)
    u[i] = 2 * t[i - 1] / (s + 1);
  return u;
}

inline RationalVector random_rational_vector(int dim, std::mt19937_64 &rng) {
  RationalVector v(dim);
  for (auto &x : v)
    x = detail::small_rational(rng);
  return v;
}

/// F(x, y) with F_i(x, y) = x^T A_i y.
inline RationalVector evaluate(const BilinearMap &f, const RationalVector &x, const RationalVector &y) {
  if (static_cast<int>(x.size()) != f.a() || static_cast<int>(y.size()) != f.b())
    throw dimension_error("evaluate: argument dimensions do not match the map");
  RationalVector out(f.c());
  for (int i = 0; i < f.c(); ++i) {
    const IntMatrix &m = f.mats()[i];
    Rational acc = 0;
    for (int j = 0; j < f.a(); ++j) {
      if (x[j] == 0)
        continue;
      Rational row = 0;
      for (int l = 0; l < f.b(); ++l)
        if (m(j, l) != 0)
          row += m(j, l) * y[l];
      acc += x[j] * row;
    }
    out[i] = acc;
  }
  return out;
}

struct SampleReport {
  int samples = 0;
  int failures = 0;
  /// Index of the first failing sample.
  std::optional<int> first_failure;

  bool passed() const { return failures == 0; }
};

/// Checks ||f||^2 = 2 f_1 for f = F/2 at random rational points of the shifted spheres.
inline SampleReport sample_shifted_identity(const BilinearMap &f, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  SampleReport r;
  for (int s = 0; s < count; ++s) {
    RationalVector x = shifted_sphere_point(f.a(), rng);
    RationalVector y = shifted_sphere_point(f.b(), rng);
    RationalVector z = evaluate(f, x, y);
    for (auto &v : z)
      v /= 2;
    ++r.samples;
    if (squared_norm(z) != 2 * z[0]) {
      if (!r.first_failure)
        r.first_failure = s;
      ++r.failures;
    }
  }
  return r;
}

/// Checks ||F(x, y)||^2 = ||x||^2 ||y||^2 at random rational points of the whole space.
inline SampleReport sample_normed_identity(const BilinearMap &f, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  SampleReport r;
  for (int s = 0; s < count; ++s) {
    RationalVector x = random_rational_vector(f.a(), rng);
    RationalVector y = random_rational_vector(f.b(), rng);
    ++r.samples;
    if (squared_norm(evaluate(f, x, y)) != squared_norm(x) * squared_norm(y)) {
      if (!r.first_failure)
        r.first_failure = s;
      ++r.failures;
    }
  }
  return r;
}

} // namespace kosphere
