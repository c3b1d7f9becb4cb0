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

#include "exaudit/harness.h"

#include <algorithm>
#include <set>
#include <thread>

#include "exaudit/error.h"

namespace exaudit {

void RunConfig::Validate() const {
  limits.Validate();
  mix.Validate();
  audit.Validate();
  incentives.Validate();
  gating.Validate();
  policy.Validate(limits);
  if (condition == Condition::kSilent && policy.kind != PolicyKind::kSilent) {
    throw ConfigError("policy", "SILENT condition requires the silent policy");
  }
  if (condition == Condition::kArtifact && policy.kind == PolicyKind::kSilent) {
    throw ConfigError("policy",
                      "ARTIFACT condition needs a claim-producing policy");
  }
  if (episodes_per_seed < 1) {
    throw ConfigError("episodes", "must be at least 1");
  }
  if (seeds.empty()) throw ConfigError("seeds", "must be nonempty");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() !=
      seeds.size()) {
    throw ConfigError("seeds", "must be distinct");
  }
  if (threads < 0) throw ConfigError("threads", "must be >= 0");
}

EpisodeLog RunEpisode(const RunConfig& cfg, std::uint64_t seed,
                      std::uint64_t index) {
  EpisodeLog log;
  log.seed = seed;
  log.index = index;
  log.truth = GenerateEpisodeAt(seed, index, cfg.mix, cfg.limits);

  RngStream policy_rng(seed, index, StreamTag::kPolicy);
  PolicyAction act = Propose(cfg.policy, log.truth, cfg.incentives, cfg.audit,
                             policy_rng);
  log.proposal = std::move(act.proposal);
  log.misreported = act.misreported;
  if (log.proposal.artifact.claims) {
    log.k_misreported =
        CountInconsistent(*log.proposal.artifact.claims, log.truth, cfg.limits);
  }

  RngStream audit_rng(seed, index, StreamTag::kAudit);
  log.audit = RunAudit(log.proposal, log.truth, cfg.audit, audit_rng);
  log.decision = Gate(log.proposal, log.audit, cfg.limits, cfg.gating);
  log.payoff = Payoff(log.decision, log.audit, log.truth, log.proposal,
                      cfg.incentives);
  log.welfare = Welfare(log.payoff);
  return log;
}

namespace {

std::vector<EpisodeLog> RunSeed(const RunConfig& cfg, std::uint64_t seed,
                                int threads) {
  const std::size_t n = cfg.episodes_per_seed;
  std::vector<EpisodeLog> logs(n);
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(threads), 1, n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) logs[i] = RunEpisode(cfg, seed, i);
    return logs;
  }
  // Each worker owns a contiguous index range; slots never overlap.
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([&cfg, &logs, seed, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) logs[i] = RunEpisode(cfg, seed, i);
    });
  }
  for (auto& t : pool) t.join();
  return logs;
}

}  // namespace

RunResult Run(const RunConfig& cfg, bool keep_logs) {
  cfg.Validate();
  int threads = cfg.threads;
  if (threads == 0) {
    threads = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  }
  RunResult result;
  std::vector<MetricsSummary> summaries;
  for (std::uint64_t seed : cfg.seeds) {
    SeedResult sr;
    sr.seed = seed;
    std::vector<EpisodeLog> logs = RunSeed(cfg, seed, threads);
    // Aggregation always runs in index order.
    sr.metrics = AggregateMetrics(logs);
    if (keep_logs) sr.logs = std::move(logs);
    summaries.push_back(sr.metrics);
    result.per_seed.push_back(std::move(sr));
  }
  result.pooled = Pool(summaries);
  return result;
}

PolicyKind EffectivePolicy(Condition condition, PolicyKind requested) {
  if (condition == Condition::kSilent) return PolicyKind::kSilent;
  return requested == PolicyKind::kSilent ? PolicyKind::kTruthful : requested;
}

SweepGrid AuditIntensityGrid() {
  SweepGrid g;
  g.q = {0.0, 0.1, 0.3, 0.5, 0.7, 1.0};
  g.conditions = {Condition::kArtifact, Condition::kSilent};
  return g;
}

SweepGrid IncentiveGrid() {
  SweepGrid g;
  g.q = {0.3};
  g.incentives = {{1.0, 2.0}, {2.0, 1.0}, {1.0, 4.0}};
  return g;
}

SweepGrid BudgetGrid() {
  SweepGrid g;
  g.q = {0.3};
  g.budgets = {1, 2, 4};
  return g;
}

std::vector<RunConfig> ExpandGrid(const RunConfig& base, const SweepGrid& grid) {
  if (grid.empty()) throw UsageError("Sweep: empty parameter grid");

  auto or_base = [](const auto& values, auto fallback) {
    using T = decltype(fallback);
    return values.empty() ? std::vector<T>{fallback}
                          : std::vector<T>(values.begin(), values.end());
  };
  const auto conditions = or_base(grid.conditions, base.condition);
  const auto incentives = or_base(
      grid.incentives, std::make_pair(base.incentives.V, base.incentives.L));
  const auto budgets = or_base(grid.budgets, base.audit.budget);
  const auto qs = or_base(grid.q, base.audit.q);

  std::vector<RunConfig> out;
  for (Condition c : conditions) {
    for (const auto& [v, l] : incentives) {
      for (int b : budgets) {
        for (double q : qs) {
          RunConfig cfg = base;
          cfg.condition = c;
          cfg.policy.kind = EffectivePolicy(c, base.policy.kind);
          cfg.incentives.V = v;
          cfg.incentives.L = l;
          cfg.audit.budget = b;
          cfg.audit.q = q;
          out.push_back(std::move(cfg));
        }
      }
    }
  }
  return out;
}

std::vector<SweepCell> Sweep(const RunConfig& base, const SweepGrid& grid,
                             bool keep_logs) {
  std::vector<SweepCell> cells;
  for (RunConfig& cfg : ExpandGrid(base, grid)) {
    SweepCell cell;
    cell.result = Run(cfg, keep_logs);
    cell.config = std::move(cfg);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string_view ToString(Condition condition) {
  return condition == Condition::kArtifact ? "artifact" : "silent";
}

std::optional<Condition> ParseCondition(std::string_view s) {
  if (s == "artifact") return Condition::kArtifact;
  if (s == "silent") return Condition::kSilent;
  return std::nullopt;
}

}  // namespace exaudit
