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

#ifndef EXAUDIT_HARNESS_H_
#define EXAUDIT_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "exaudit/audit.h"
#include "exaudit/economics.h"
#include "exaudit/episode_log.h"
#include "exaudit/episodes.h"
#include "exaudit/metrics.h"
#include "exaudit/policies.h"
#include "exaudit/validator.h"

namespace exaudit {

// ARTIFACT: the proposer attaches claims. SILENT: only the action is sent.
enum class Condition { kArtifact, kSilent };

struct RunConfig {
  Condition condition = Condition::kArtifact;
  ProposerPolicy policy;
  AuditPolicy audit;
  IncentiveParams incentives;
  GatingConfig gating;
  EpisodeMix mix;
  LimitsConfig limits;
  std::size_t episodes_per_seed = 200;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  // Worker threads per run; 0 means hardware concurrency. Results do not
  // depend on this value.
  int threads = 1;

  // Throws ConfigError naming the first invalid field.
  void Validate() const;
};

// One full exchange: generate, propose, audit, gate, pay. Pure function of
// (cfg, seed, index).
EpisodeLog RunEpisode(const RunConfig& cfg, std::uint64_t seed,
                      std::uint64_t index);

struct SeedResult {
  std::uint64_t seed = 0;
  MetricsSummary metrics;
  std::vector<EpisodeLog> logs;  // empty unless logs were kept
};

struct RunResult {
  std::vector<SeedResult> per_seed;
  PooledMetrics pooled;
};

RunResult Run(const RunConfig& cfg, bool keep_logs = true);

struct SweepGrid {
  // An empty dimension keeps the base configuration's value.
  std::vector<double> q;
  std::vector<int> budgets;
  std::vector<std::pair<double, double>> incentives;  // (V, L)
  std::vector<Condition> conditions;

  bool empty() const {
    return q.empty() && budgets.empty() && incentives.empty() &&
           conditions.empty();
  }
};

// Presets for the standard sweeps.
SweepGrid AuditIntensityGrid();  // q in {0,.1,.3,.5,.7,1} x both conditions
SweepGrid IncentiveGrid();       // (V,L) in {(1,2),(2,1),(1,4)} at q = 0.3
SweepGrid BudgetGrid();          // B in {1,2,4} at q = 0.3

struct SweepCell {
  RunConfig config;
  RunResult result;
};

// Cell configurations in condition, (V, L), B, q order. Throws UsageError
// on an empty grid.
std::vector<RunConfig> ExpandGrid(const RunConfig& base, const SweepGrid& grid);

// Runs every cell of ExpandGrid.
std::vector<SweepCell> Sweep(const RunConfig& base, const SweepGrid& grid,
                             bool keep_logs = false);

// Policy kind actually used for a condition: SILENT forces silence, and an
// ARTIFACT cell derived from a silent base reports truthfully.
PolicyKind EffectivePolicy(Condition condition, PolicyKind requested);

std::string_view ToString(Condition condition);
std::optional<Condition> ParseCondition(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_HARNESS_H_
