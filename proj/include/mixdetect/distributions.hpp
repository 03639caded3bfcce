// Copyright 2026 The mixdetect Authors
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

#ifndef MIXDETECT_DISTRIBUTIONS_HPP_
#define MIXDETECT_DISTRIBUTIONS_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixdetect {

// The two even base densities the toolkit ships with.
enum class Dist { gaussian, laplace };

inline std::string_view dist_name(Dist d) {
  return d == Dist::gaussian ? "gaussian" : "laplace";
}

inline Dist dist_from_name(std::string_view name) {
  if (name == "gaussian") return Dist::gaussian;
  if (name == "laplace") return Dist::laplace;
  throw std::invalid_argument("unknown distribution: " + std::string(name));
}

namespace detail {
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace detail

inline double pdf(Dist d, double x) {
  switch (d) {
    case Dist::gaussian:
      return detail::kInvSqrt2Pi * std::exp(-0.5 * x * x);
    case Dist::laplace:
      return 0.5 * std::exp(-std::abs(x));
  }
  return 0.0;
}

// P(Z > x). The Gaussian branch goes through erfc so both tails keep full
// relative accuracy.
inline double survival(Dist d, double x) {
  switch (d) {
    case Dist::gaussian:
      return 0.5 * std::erfc(x * detail::kInvSqrt2);
    case Dist::laplace:
      return x >= 0.0 ? 0.5 * std::exp(-x) : 1.0 - 0.5 * std::exp(x);
  }
  return 0.0;
}

inline double cdf(Dist d, double x) {
  switch (d) {
    case Dist::gaussian:
      return 0.5 * std::erfc(-x * detail::kInvSqrt2);
    case Dist::laplace:
      return x < 0.0 ? 0.5 * std::exp(x) : 1.0 - 0.5 * std::exp(-x);
  }
  return 0.0;
}

// Solves survival(d, x) = p. Laplace uses the closed form; the Gaussian
// branch bisects survival() on [-40, 40] down to the last representable
// midpoint, which is well inside the 1e-12 round-trip contract.
inline double inverse_survival(Dist d, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("inverse_survival: p must lie in (0,1)");
  if (d == Dist::laplace)
    return p <= 0.5 ? -std::log(2.0 * p) : std::log(2.0 * (1.0 - p));
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (survival(Dist::gaussian, mid) > p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// sigma^2 = integral of x^2 phi(x) dx.
inline double base_variance(Dist d) { return d == Dist::gaussian ? 1.0 : 2.0; }

// integral of x^4 phi(x) dx.
inline double base_fourth_moment(Dist d) {
  return d == Dist::gaussian ? 3.0 : 24.0;
}

}  // namespace mixdetect

#endif  // MIXDETECT_DISTRIBUTIONS_HPP_
