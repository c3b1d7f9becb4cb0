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

#include "exaudit/metrics.h"

#include <cmath>

#include "exaudit/error.h"

namespace exaudit {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double SampleStd(std::size_t n, double m2) {
  return n < 2 ? 0.0 : std::sqrt(m2 / static_cast<double>(n - 1));
}

}  // namespace

void MetricsAccumulator::Moments::Add(double x) {
  ++n;
  const double d = x - mean;
  mean += d / static_cast<double>(n);
  m2 += d * (x - mean);
}

void MetricsAccumulator::Moments::Merge(const Moments& o) {
  if (o.n == 0) return;
  if (n == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(o.n);
  const double d = o.mean - mean;
  const double total = na + nb;
  mean += d * nb / total;
  m2 += o.m2 + d * d * na * nb / total;
  n += o.n;
}

void MetricsAccumulator::Add(const EpisodeLog& log) {
  MetricsSummary& c = counts_;
  ++c.episodes;
  const bool accepted = log.decision.accepted();
  switch (log.truth.klass) {
    case EpisodeClass::kAmbiguousGood:
      ++c.ambiguous_episodes;
      if (accepted) ++c.accepted_ambiguous;
      ambiguous_welfare_.Add(log.welfare);
      break;
    case EpisodeClass::kClearSafe:
      ++c.clear_safe_episodes;
      if (accepted) ++c.accepted_clear_safe;
      break;
    case EpisodeClass::kBad:
      ++c.bad_episodes;
      if (log.misreported) ++c.misreports;
      if (log.audit.status == AuditStatus::kFail) ++c.bad_audit_fails;
      break;
  }
  if (accepted) {
    ++c.accepted;
    if (!IsCompliant(log.truth)) ++c.bad_accepted;
  }
  if (log.audit.triggered()) ++c.audits_triggered;
  if (log.audit.status == AuditStatus::kFail) ++c.audit_fails;
  ++c.route_counts[static_cast<int>(log.decision.route)];
  welfare_.Add(log.welfare);
  words_sum_ += log.proposal.artifact.text_word_count;
}

void MetricsAccumulator::Merge(const MetricsAccumulator& other) {
  MetricsSummary& c = counts_;
  const MetricsSummary& o = other.counts_;
  c.episodes += o.episodes;
  c.ambiguous_episodes += o.ambiguous_episodes;
  c.clear_safe_episodes += o.clear_safe_episodes;
  c.bad_episodes += o.bad_episodes;
  c.accepted += o.accepted;
  c.accepted_ambiguous += o.accepted_ambiguous;
  c.accepted_clear_safe += o.accepted_clear_safe;
  c.bad_accepted += o.bad_accepted;
  c.audits_triggered += o.audits_triggered;
  c.audit_fails += o.audit_fails;
  c.bad_audit_fails += o.bad_audit_fails;
  c.misreports += o.misreports;
  for (int r = 0; r < kNumRoutes; ++r) c.route_counts[r] += o.route_counts[r];
  welfare_.Merge(other.welfare_);
  ambiguous_welfare_.Merge(other.ambiguous_welfare_);
  words_sum_ += other.words_sum_;
}

MetricsSummary MetricsAccumulator::Summary() const {
  MetricsSummary m = counts_;
  m.approval_rate = Ratio(m.accepted, m.episodes);
  m.ambiguous_approval_rate = Ratio(m.accepted_ambiguous, m.ambiguous_episodes);
  m.clear_safe_approval_rate =
      Ratio(m.accepted_clear_safe, m.clear_safe_episodes);
  m.bad_approval_rate = Ratio(m.bad_accepted, m.accepted);
  m.audit_fail_rate = Ratio(m.audit_fails, m.audits_triggered);
  m.detection_rate_bad = Ratio(m.bad_audit_fails, m.bad_episodes);
  m.misreport_rate_bad = Ratio(m.misreports, m.bad_episodes);
  m.mean_welfare = welfare_.mean;
  m.welfare_std = SampleStd(welfare_.n, welfare_.m2);
  m.ambiguous_mean_welfare = ambiguous_welfare_.mean;
  m.mean_words =
      m.episodes == 0 ? 0.0 : words_sum_ / static_cast<double>(m.episodes);
  return m;
}

MetricsSummary AggregateMetrics(std::span<const EpisodeLog> logs) {
  if (logs.empty()) throw UsageError("AggregateMetrics: empty log list");
  MetricsAccumulator acc;
  for (const auto& log : logs) acc.Add(log);
  return acc.Summary();
}

std::vector<std::pair<std::string, double>> Flatten(const MetricsSummary& m) {
  auto d = [](std::size_t n) { return static_cast<double>(n); };
  return {
      {"ambig_approval", m.ambiguous_approval_rate},
      {"bad_approval", m.bad_approval_rate},
      {"audit_fail", m.audit_fail_rate},
      {"mean_welfare", m.mean_welfare},
      {"welfare_std", m.welfare_std},
      {"mean_words", m.mean_words},
      {"safe_margin_accepts", d(m.route_count(Route::kSafeMargin))},
      {"typed_gate_accepts", d(m.route_count(Route::kTypedClaimGate))},
      {"approval", m.approval_rate},
      {"clear_safe_approval", m.clear_safe_approval_rate},
      {"detection_rate_bad", m.detection_rate_bad},
      {"misreport_rate_bad", m.misreport_rate_bad},
      {"ambig_welfare", m.ambiguous_mean_welfare},
  };
}

double PooledMetrics::Mean(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return mean[i];
  }
  throw UsageError("PooledMetrics: unknown metric " + name);
}

double PooledMetrics::Std(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return stddev[i];
  }
  throw UsageError("PooledMetrics: unknown metric " + name);
}

PooledMetrics Pool(std::span<const MetricsSummary> per_seed) {
  if (per_seed.empty()) throw UsageError("Pool: no seeds");
  PooledMetrics p;
  std::vector<std::vector<std::pair<std::string, double>>> flat;
  for (const auto& m : per_seed) flat.push_back(Flatten(m));
  const std::size_t k = flat.front().size();
  const double n = static_cast<double>(per_seed.size());
  for (std::size_t i = 0; i < k; ++i) {
    p.names.push_back(flat.front()[i].first);
    double sum = 0.0;
    for (const auto& f : flat) sum += f[i].second;
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& f : flat) ss += (f[i].second - mean) * (f[i].second - mean);
    p.mean.push_back(mean);
    p.stddev.push_back(per_seed.size() < 2 ? 0.0 : std::sqrt(ss / (n - 1.0)));
  }
  return p;
}

}  // namespace exaudit
