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

#ifndef MIXDETECT_BASELINES_HPP_
#define MIXDETECT_BASELINES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixdetect/distributions.hpp"
#include "mixdetect/errors.hpp"
#include "mixdetect/parallel.hpp"
#include "mixdetect/rng.hpp"
#include "mixdetect/sample.hpp"
#include "mixdetect/spacing_test.hpp"

namespace mixdetect {

enum class StatisticKind { hc_known, hc_plugin, ks_known, ks_plugin };

inline std::string_view statistic_kind_name(StatisticKind k) {
  switch (k) {
    case StatisticKind::hc_known:
      return "hc_known";
    case StatisticKind::hc_plugin:
      return "hc_plugin";
    case StatisticKind::ks_known:
      return "ks_known";
    case StatisticKind::ks_plugin:
      return "ks_plugin";
  }
  return "";
}

inline StatisticKind statistic_kind_from_name(std::string_view name) {
  if (name == "hc_known") return StatisticKind::hc_known;
  if (name == "hc_plugin") return StatisticKind::hc_plugin;
  if (name == "ks_known") return StatisticKind::ks_known;
  if (name == "ks_plugin") return StatisticKind::ks_plugin;
  throw std::invalid_argument("unknown statistic kind: " + std::string(name));
}

// Calibrated (1-alpha)-quantile of one baseline statistic under H0.
struct BaselineTable {
  int n = 0;
  double alpha = 0.0;
  double threshold = 0.0;
  Dist base = Dist::gaussian;
  StatisticKind kind = StatisticKind::ks_known;
  std::int64_t budget = 0;
  std::uint64_t seed = 0;
  bool hc_plugin_literal = false;
};

struct HcResult {
  double value = 0.0;
  int clip_events = 0;  // count of p-values pushed back into [1e-12, 1-1e-12]
};

namespace detail {

inline constexpr double kHcClip = 1e-12;

// Re-anchors a sorted sample at its minimum; differences of representable
// inputs are exact, which makes the plugin statistics bit-identical under
// exact translation of the data.
inline void anchored_copy(std::span<const double> sorted,
                          std::vector<double>& out) {
  out.resize(sorted.size());
  const double anchor = sorted.front();
  for (std::size_t i = 0; i < sorted.size(); ++i) out[i] = sorted[i] - anchor;
}

inline double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

// sqrt(n) * max_i max(i/n - G(x_(i)), G(x_(i)) - (i-1)/n), evaluated exactly
// at the jump points of the empirical cdf.
inline double ks_stat_sorted(std::span<const double> sorted, Dist base,
                             bool plugin, std::vector<double>& scratch) {
  const std::size_t n = sorted.size();
  const auto dn = static_cast<double>(n);
  double center = 0.0;
  std::span<const double> data = sorted;
  if (plugin) {
    anchored_copy(sorted, scratch);
    center = mean_of(scratch);
    data = scratch;
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = cdf(base, data[i] - center);
    const double up = static_cast<double>(i + 1) / dn - g;
    const double down = g - static_cast<double>(i) / dn;
    sup = std::max(sup, std::max(up, down));
  }
  return std::sqrt(dn) * sup;
}

// max_i sqrt(n) (i/n - p_(i)) / sqrt(p_(i)(1-p_(i))) with p sorted ascending
// and clipped into [1e-12, 1-1e-12]. The plugin form centers observations by
// the sample mean; `literal` instead adds the mean (diagnostic reading, not
// translation invariant).
inline HcResult hc_stat_sorted(std::span<const double> sorted, Dist base,
                               bool plugin, bool literal,
                               std::vector<double>& p_scratch,
                               std::vector<double>& anchor_scratch) {
  const std::size_t n = sorted.size();
  const auto dn = static_cast<double>(n);
  p_scratch.resize(n);
  if (!plugin) {
    for (std::size_t i = 0; i < n; ++i)
      p_scratch[i] = survival(base, sorted[i]);
  } else if (literal) {
    const double mean = mean_of(sorted);
    for (std::size_t i = 0; i < n; ++i)
      p_scratch[i] = survival(base, sorted[i] + mean);
  } else {
    anchored_copy(sorted, anchor_scratch);
    const double mean = mean_of(anchor_scratch);
    for (std::size_t i = 0; i < n; ++i)
      p_scratch[i] = survival(base, anchor_scratch[i] - mean);
  }
  std::sort(p_scratch.begin(), p_scratch.end());
  HcResult result;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double p = p_scratch[i];
    if (p < kHcClip || p > 1.0 - kHcClip) {
      ++result.clip_events;
      p = std::clamp(p, kHcClip, 1.0 - kHcClip);
    }
    const double term = std::sqrt(dn) *
                        (static_cast<double>(i + 1) / dn - p) /
                        std::sqrt(p * (1.0 - p));
    best = std::max(best, term);
  }
  result.value = best;
  return result;
}

inline double baseline_stat_sorted(std::span<const double> sorted,
                                   const BaselineTable& table,
                                   std::vector<double>& s1,
                                   std::vector<double>& s2) {
  switch (table.kind) {
    case StatisticKind::ks_known:
      return ks_stat_sorted(sorted, table.base, false, s1);
    case StatisticKind::ks_plugin:
      return ks_stat_sorted(sorted, table.base, true, s1);
    case StatisticKind::hc_known:
      return hc_stat_sorted(sorted, table.base, false, false, s1, s2).value;
    case StatisticKind::hc_plugin:
      return hc_stat_sorted(sorted, table.base, true,
                            table.hc_plugin_literal, s1, s2)
          .value;
  }
  return 0.0;
}

}  // namespace detail

inline double ks_statistic(const SampleVector& s, Dist base, bool plugin) {
  if (s.size() < 1) throw std::domain_error("ks_statistic: n must be >= 1");
  std::vector<double> storage;
  std::span<const double> sorted;
  detail::require_sorted_view(s, storage, sorted);
  std::vector<double> scratch;
  return detail::ks_stat_sorted(sorted, base, plugin, scratch);
}

inline HcResult hc_statistic_detail(const SampleVector& s, Dist base,
                                    bool plugin, bool literal = false) {
  if (s.size() < 1) throw std::domain_error("hc_statistic: n must be >= 1");
  std::vector<double> storage;
  std::span<const double> sorted;
  detail::require_sorted_view(s, storage, sorted);
  std::vector<double> p_scratch, anchor_scratch;
  return detail::hc_stat_sorted(sorted, base, plugin, literal, p_scratch,
                                anchor_scratch);
}

inline double hc_statistic(const SampleVector& s, Dist base, bool plugin,
                           bool literal = false) {
  return hc_statistic_detail(s, base, plugin, literal).value;
}

// Empirical (1-alpha)-quantile of the chosen statistic over `budget` H0
// replicates at location 0 (the known-mean null fixes 0; plugin statistics
// are location-free, so 0 is equally valid for them).
inline BaselineTable calibrate_baseline(StatisticKind kind, int n, Dist base,
                                        double alpha, std::int64_t budget,
                                        std::uint64_t seed, int threads = 0,
                                        bool hc_plugin_literal = false) {
  if (n < 1) throw std::domain_error("calibrate_baseline: n must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("calibrate_baseline: alpha must lie in (0,1)");
  if (budget < 1000)
    throw CalibrationBudgetError(
        "calibrate_baseline: Monte Carlo budget below 1000");

  BaselineTable table;
  table.n = n;
  table.alpha = alpha;
  table.base = base;
  table.kind = kind;
  table.budget = budget;
  table.seed = seed;
  table.hc_plugin_literal = hc_plugin_literal;

  const auto b_count = static_cast<std::size_t>(budget);
  const std::uint64_t domain = seed ^ seed_domain::kBaselineCalibration ^
                               (static_cast<std::uint64_t>(kind) + 1) *
                                   0x9e3779b97f4a7c15ull;
  std::vector<double> stats(b_count);
  parallel_chunks(b_count, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> buf(static_cast<std::size_t>(n));
    std::vector<double> s1, s2;
    for (std::size_t b = begin; b < end; ++b) {
      RngStream stream(domain, b);
      for (auto& x : buf) x = draw(base, stream);
      std::sort(buf.begin(), buf.end());
      stats[b] =
          detail::baseline_stat_sorted(std::span<const double>(buf), table,
                                       s1, s2);
    }
  });
  std::sort(stats.begin(), stats.end());
  const std::int64_t idx = detail::ceil_quantile_index(alpha, budget);
  table.threshold = stats[static_cast<std::size_t>(idx - 1)];
  return table;
}

inline TestDecision run_baseline(const SampleVector& s,
                                 const BaselineTable& table) {
  if (static_cast<int>(s.size()) != table.n)
    throw std::invalid_argument(
        "run_baseline: sample size does not match table");
  std::vector<double> storage;
  std::span<const double> sorted;
  detail::require_sorted_view(s, storage, sorted);
  std::vector<double> s1, s2;
  const double stat = detail::baseline_stat_sorted(sorted, table, s1, s2);
  TestDecision decision;
  const bool exceeded = stat > table.threshold;
  decision.per_scale.push_back({0, stat, table.threshold, exceeded});
  decision.reject = exceeded;
  if (exceeded) decision.triggering_scale = 0;
  return decision;
}

}  // namespace mixdetect

#endif  // MIXDETECT_BASELINES_HPP_
