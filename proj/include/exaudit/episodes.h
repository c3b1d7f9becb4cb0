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

#ifndef EXAUDIT_EPISODES_H_
#define EXAUDIT_EPISODES_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "exaudit/artifact.h"
#include "exaudit/rng.h"

namespace exaudit {

enum class EpisodeClass { kAmbiguousGood, kClearSafe, kBad };

// Which constraint a BAD state breaks. Generated BAD states break exactly one.
enum class Violation { kNone, kRisk, kDelta, kIntent };

// Lower edge of the near-boundary band, as a fraction of the limit.
inline constexpr double kAmbiguousBandLow = 0.92;
// Upper edge of BAD overshoot, as a fraction of the limit.
inline constexpr double kBadOvershootHigh = 1.25;

struct GroundTruthState {
  Intent true_intent = Intent::kHedge;
  double true_risk = 0.0;
  double true_net_delta = 0.0;
  EpisodeClass klass = EpisodeClass::kClearSafe;
  Violation violation = Violation::kNone;
  LimitsConfig limits;

  double risk_ratio() const { return true_risk / limits.risk_limit; }
  double delta_ratio() const;  // |delta| / delta_limit

  bool operator==(const GroundTruthState&) const = default;
};

// True iff intent is HEDGE and both metrics are within their limits.
bool IsCompliant(const GroundTruthState& truth);

struct EpisodeMix {
  double p_ambiguous = 0.5;
  double p_clear_safe = 0.25;
  double p_bad = 0.25;
  // Clear-safe metrics are drawn in [0, 1 - clear_headroom] * limit.
  double clear_headroom = 0.25;

  void Validate() const;
};

// What the Validator can see of an action without any artifact.
struct ActionDescriptor {
  double observable_risk_estimate = 0.0;
  double observable_delta_estimate = 0.0;

  bool operator==(const ActionDescriptor&) const = default;
};

// Action estimates are the true metrics shifted outward by
// `offset` * limit (default 0). Delta keeps its sign.
ActionDescriptor ObserveAction(const GroundTruthState& truth,
                               double offset = 0.0);

struct Proposal {
  ActionDescriptor action;
  ReasoningArtifact artifact;

  bool operator==(const Proposal&) const = default;
};

GroundTruthState GenerateEpisode(RngStream& rng, const EpisodeMix& mix,
                                 const LimitsConfig& limits);

// Element i is GenerateEpisode on the stream (seed, i, kEpisode).
std::vector<GroundTruthState> GenerateBatch(std::uint64_t seed, std::size_t n,
                                            const EpisodeMix& mix,
                                            const LimitsConfig& limits);

// Single element of GenerateBatch without materializing the prefix.
GroundTruthState GenerateEpisodeAt(std::uint64_t seed, std::uint64_t index,
                                   const EpisodeMix& mix,
                                   const LimitsConfig& limits);

std::string_view ToString(EpisodeClass klass);
std::string_view ToString(Violation violation);
std::optional<EpisodeClass> ParseEpisodeClass(std::string_view s);
std::optional<Violation> ParseViolation(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_EPISODES_H_
