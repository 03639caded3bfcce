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

#ifndef MIXDETECT_SAMPLE_HPP_
#define MIXDETECT_SAMPLE_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixdetect/distributions.hpp"
#include "mixdetect/rng.hpp"

namespace mixdetect {

// A real-valued sample. `sorted` certifies that `values` is nondecreasing.
struct SampleVector {
  std::vector<double> values;
  bool sorted = false;

  SampleVector() = default;
  explicit SampleVector(std::vector<double> v, bool is_sorted = false)
      : values(std::move(v)), sorted(is_sorted) {}

  std::size_t size() const { return values.size(); }

  void sort() {
    if (!sorted) {
      std::sort(values.begin(), values.end());
      sorted = true;
    }
  }
};

// Two-component location mixture (1-eps) phi(.-mu1) + eps phi(.-mu2).
// The pure H0 model is represented by sample_pure, never by eps in {0,1}.
struct MixtureParams {
  double epsilon;
  double mu1;
  double mu2;
  Dist base;

  MixtureParams(double eps, double m1, double m2, Dist d)
      : epsilon(eps), mu1(m1), mu2(m2), base(d) {
    if (!(eps > 0.0 && eps < 1.0))
      throw std::domain_error("MixtureParams: epsilon must lie in (0,1)");
    if (!(m1 < m2))
      throw std::domain_error("MixtureParams: mu1 < mu2 required");
  }
};

inline double draw(Dist d, RngStream& stream) {
  return d == Dist::gaussian ? stream.gaussian() : stream.laplace();
}

inline SampleVector sample_pure(Dist d, double mu, std::size_t n,
                                RngStream& stream) {
  if (n < 1) throw std::domain_error("sample_pure: n must be >= 1");
  std::vector<double> v(n);
  for (auto& x : v) x = draw(d, stream) + mu;
  return SampleVector(std::move(v));
}

inline SampleVector sample_mixture(const MixtureParams& p, std::size_t n,
                                   RngStream& stream) {
  if (n < 1) throw std::domain_error("sample_mixture: n must be >= 1");
  std::vector<double> v(n);
  for (auto& x : v) {
    const double mu = stream.uniform() < p.epsilon ? p.mu2 : p.mu1;
    x = draw(p.base, stream) + mu;
  }
  return SampleVector(std::move(v));
}

inline double mixture_pdf(const MixtureParams& p, double x) {
  return (1.0 - p.epsilon) * pdf(p.base, x - p.mu1) +
         p.epsilon * pdf(p.base, x - p.mu2);
}

// sigma^2 + eps(1-eps)(mu2-mu1)^2.
inline double mixture_variance(const MixtureParams& p) {
  const double tau = p.mu2 - p.mu1;
  return base_variance(p.base) + p.epsilon * (1.0 - p.epsilon) * tau * tau;
}

}  // namespace mixdetect

#endif  // MIXDETECT_SAMPLE_HPP_
