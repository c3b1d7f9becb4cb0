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

#ifndef EXAUDIT_EPISODE_LOG_H_
#define EXAUDIT_EPISODE_LOG_H_

#include <cstdint>

#include "json.hpp"

#include "exaudit/audit.h"
#include "exaudit/economics.h"
#include "exaudit/episodes.h"
#include "exaudit/validator.h"

namespace exaudit {

// Everything that happened in one episode. Self-contained: every metric in
// MetricsSummary can be recomputed from a list of these.
struct EpisodeLog {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  GroundTruthState truth;
  Proposal proposal;
  int k_misreported = 0;     // claims contradicting the truth
  bool misreported = false;  // the policy chose to misreport
  AuditOutcome audit;
  Decision decision;
  PayoffBreakdown payoff;
  double welfare = 0.0;

  bool operator==(const EpisodeLog&) const = default;
};

nlohmann::ordered_json ToJson(const EpisodeLog& log);

// Throws nlohmann::json::exception or UsageError on malformed records.
EpisodeLog EpisodeLogFromJson(const nlohmann::json& j);

}  // namespace exaudit

#endif  // EXAUDIT_EPISODE_LOG_H_
