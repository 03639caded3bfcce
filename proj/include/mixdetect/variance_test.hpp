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

#ifndef MIXDETECT_VARIANCE_TEST_HPP_
#define MIXDETECT_VARIANCE_TEST_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mixdetect/distributions.hpp"
#include "mixdetect/errors.hpp"
#include "mixdetect/parallel.hpp"
#include "mixdetect/rng.hpp"
#include "mixdetect/sample.hpp"
#include "mixdetect/spacing_test.hpp"

namespace mixdetect {

// Monte Carlo threshold v_{alpha,n} for the sample-variance test, plus the
// moment inputs of the analytic Chebyshev bound sigma^2 + sqrt(B/(n alpha)).
struct VarianceTable {
  int n = 0;
  double alpha = 0.0;
  double v_alpha_n = 0.0;
  double sigma2 = 0.0;
  double fourth_moment_bound = 0.0;
  Dist base = Dist::gaussian;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
};

// Unbiased sample variance. The sample is re-anchored at its minimum before
// the two-pass mean/centered-sum computation; differences of representable
// inputs cancel an additive shift exactly, so the result is bit-identical
// under exact translation of the data.
inline double sample_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::domain_error("sample_variance: n must be >= 2");
  const double anchor = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double x : values) sum += x - anchor;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : values) {
    const double d = (x - anchor) - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(n - 1);
}

inline double sample_variance(const SampleVector& s) {
  return sample_variance(std::span<const double>(s.values));
}

// Right-hand side of the variance-of-S^2 inequality:
//   (1/n) { m4 - (n-3)/(n-1) v^2 }
// with m4 the fourth central moment and v the variance.
inline double wilks_variance_bound(int n, double fourth_central_moment,
                                   double variance) {
  if (n < 2) throw std::domain_error("wilks_variance_bound: n must be >= 2");
  if (!(fourth_central_moment >= 0.0) || !(variance >= 0.0))
    throw std::domain_error("wilks_variance_bound: moments must be >= 0");
  if (fourth_central_moment < variance * variance)
    throw std::domain_error(
        "wilks_variance_bound: fourth moment below variance^2");
  const double ratio =
      static_cast<double>(n - 3) / static_cast<double>(n - 1);
  return (fourth_central_moment - ratio * variance * variance) /
         static_cast<double>(n);
}

// Conservative fallback threshold from the moment bound; the calibrated
// Monte Carlo quantile is the primary threshold.
inline double analytic_variance_bound(Dist base, int n, double alpha) {
  if (n < 2) throw std::domain_error("analytic_variance_bound: n must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("analytic_variance_bound: alpha must lie in (0,1)");
  return base_variance(base) +
         std::sqrt(base_fourth_moment(base) / (static_cast<double>(n) * alpha));
}

// Empirical (1-alpha)-quantile of S_n^2 over `budget` H0 replicates drawn at
// location 0 (S_n^2 is location-free).
inline VarianceTable calibrate_variance(int n, Dist base, double alpha,
                                        std::int64_t budget,
                                        std::uint64_t seed, int threads = 0) {
  if (n < 2) throw std::domain_error("calibrate_variance: n must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("calibrate_variance: alpha must lie in (0,1)");
  if (budget < 1000)
    throw CalibrationBudgetError(
        "calibrate_variance: Monte Carlo budget below 1000");

  const auto b_count = static_cast<std::size_t>(budget);
  const std::uint64_t domain = seed ^ seed_domain::kVarianceCalibration;
  std::vector<double> stats(b_count);
  parallel_chunks(b_count, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> buf(static_cast<std::size_t>(n));
    for (std::size_t b = begin; b < end; ++b) {
      RngStream stream(domain, b);
      for (auto& x : buf) x = draw(base, stream);
      stats[b] = sample_variance(std::span<const double>(buf));
    }
  });
  std::sort(stats.begin(), stats.end());

  VarianceTable table;
  table.n = n;
  table.alpha = alpha;
  const std::int64_t idx = detail::ceil_quantile_index(alpha, budget);
  table.v_alpha_n = stats[static_cast<std::size_t>(idx - 1)];
  table.sigma2 = base_variance(base);
  table.fourth_moment_bound = base_fourth_moment(base);
  table.base = base;
  table.budget = budget;
  table.seed = seed;
  return table;
}

enum class VarianceThreshold { monte_carlo, analytic_bound };

// Rejects iff S_n^2 strictly exceeds the threshold. Translation invariant.
inline TestDecision run_variance_test(
    const SampleVector& s, const VarianceTable& table,
    VarianceThreshold which = VarianceThreshold::monte_carlo) {
  if (static_cast<int>(s.size()) != table.n)
    throw std::invalid_argument(
        "run_variance_test: sample size does not match table");
  const double stat = sample_variance(s);
  const double threshold =
      which == VarianceThreshold::monte_carlo
          ? table.v_alpha_n
          : analytic_variance_bound(table.base, table.n, table.alpha);
  TestDecision decision;
  const bool exceeded = stat > threshold;
  decision.per_scale.push_back({0, stat, threshold, exceeded});
  decision.reject = exceeded;
  if (exceeded) decision.triggering_scale = 0;
  return decision;
}

}  // namespace mixdetect

#endif  // MIXDETECT_VARIANCE_TEST_HPP_
