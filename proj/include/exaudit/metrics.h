// Copyright 2026 The exaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXAUDIT_METRICS_H_
#define EXAUDIT_METRICS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exaudit/episode_log.h"
#include "exaudit/validator.h"

namespace exaudit {

struct MetricsSummary {
  std::size_t episodes = 0;
  std::size_t ambiguous_episodes = 0;
  std::size_t clear_safe_episodes = 0;
  std::size_t bad_episodes = 0;
  std::size_t accepted = 0;
  std::size_t accepted_ambiguous = 0;
  std::size_t accepted_clear_safe = 0;
  std::size_t bad_accepted = 0;  // accepted and non-compliant
  std::size_t audits_triggered = 0;
  std::size_t audit_fails = 0;
  std::size_t bad_audit_fails = 0;
  std::size_t misreports = 0;
  std::array<std::size_t, kNumRoutes> route_counts{};

  double approval_rate = 0.0;
  double ambiguous_approval_rate = 0.0;  // over AMBIGUOUS_GOOD episodes
  double clear_safe_approval_rate = 0.0;
  double bad_approval_rate = 0.0;  // bad_accepted / accepted, 0 if none
  double audit_fail_rate = 0.0;    // audit_fails / audits_triggered, 0 if none
  double detection_rate_bad = 0.0;  // failed audits among BAD episodes
  double misreport_rate_bad = 0.0;
  double mean_welfare = 0.0;
  double welfare_std = 0.0;  // sample std over episodes
  double ambiguous_mean_welfare = 0.0;
  double mean_words = 0.0;

  std::size_t route_count(Route r) const {
    return route_counts[static_cast<int>(r)];
  }
  bool operator==(const MetricsSummary&) const = default;
};

// Streaming aggregation. Add() in a fixed order gives bit-identical results;
// Merge() combines partitions (Chan et al. update for the welfare moments).
class MetricsAccumulator {
 public:
  void Add(const EpisodeLog& log);
  void Merge(const MetricsAccumulator& other);
  MetricsSummary Summary() const;

 private:
  struct Moments {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    void Add(double x);
    void Merge(const Moments& o);
  };

  MetricsSummary counts_;
  Moments welfare_;
  Moments ambiguous_welfare_;
  double words_sum_ = 0.0;
};

// Throws UsageError on an empty list.
MetricsSummary AggregateMetrics(std::span<const EpisodeLog> logs);

// Scalar metrics by name, in a fixed order, for pooling across seeds.
std::vector<std::pair<std::string, double>> Flatten(const MetricsSummary& m);

struct PooledMetrics {
  std::vector<std::string> names;
  std::vector<double> mean;
  std::vector<double> stddev;  // sample std across seeds, 0 for one seed

  double Mean(const std::string& name) const;
  double Std(const std::string& name) const;
};

PooledMetrics Pool(std::span<const MetricsSummary> per_seed);

}  // namespace exaudit

#endif  // EXAUDIT_METRICS_H_
