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

#ifndef EXAUDIT_ARTIFACT_H_
#define EXAUDIT_ARTIFACT_H_

#include <array>
#include <optional>
#include <string_view>

namespace exaudit {

struct GroundTruthState;

enum class Intent { kHedge, kSpeculate };

// Shared institutional knowledge: the constraint limits and the artifact
// length bound every party agrees on.
struct LimitsConfig {
  double risk_limit = 1.0;
  double delta_limit = 1.0;
  int max_words = 60;

  // Throws ConfigError naming the offending field.
  void Validate() const;
  bool operator==(const LimitsConfig&) const = default;
};

// The typed claim component of a reasoning artifact. Complete by
// construction; a proposal without claims is modeled by an empty optional.
struct ClaimSet {
  Intent intent = Intent::kHedge;
  bool risk_within_limit = true;
  bool net_delta_bounded = true;
  double confidence = 0.9;

  bool operator==(const ClaimSet&) const = default;
};

// r = (claims, text). The text itself is never modeled, only its length.
struct ReasoningArtifact {
  std::optional<ClaimSet> claims;
  int text_word_count = 0;

  bool operator==(const ReasoningArtifact&) const = default;
};

enum class ClaimType { kIntent, kRiskWithinLimit, kNetDeltaBounded, kConfidence };

inline constexpr int kNumClaimTypes = 4;
inline constexpr std::array<ClaimType, kNumClaimTypes> kAllClaimTypes = {
    ClaimType::kIntent, ClaimType::kRiskWithinLimit,
    ClaimType::kNetDeltaBounded, ClaimType::kConfidence};

enum class ClaimVerdict { kConsistent, kInconsistent };

struct ClaimCheckResult {
  ClaimType claim;
  ClaimVerdict verdict;
};

enum class SchemaVerdict { kComplete, kIncomplete };

// COMPLETE iff claims are present, confidence is a finite value in [0, 1],
// and the text fits within limits.max_words.
SchemaVerdict ValidateSchema(const ReasoningArtifact& artifact,
                             const LimitsConfig& limits);

// Consistency of one claim against the proposer's private state. CONFIDENCE
// only has a bounds check since there is no ground-truth confidence.
ClaimCheckResult CheckClaim(ClaimType claim, const ClaimSet& claims,
                            const GroundTruthState& truth,
                            const LimitsConfig& limits);

// Number of claim types that check INCONSISTENT.
int CountInconsistent(const ClaimSet& claims, const GroundTruthState& truth,
                      const LimitsConfig& limits);

// The claim set a truthful proposer would file for `truth`.
ClaimSet TruthfulClaims(const GroundTruthState& truth,
                        const LimitsConfig& limits, double confidence = 0.9);

// HEDGE with both compliance booleans set.
bool AssertsCompliance(const ClaimSet& claims);

std::string_view ToString(Intent intent);
std::string_view ToString(ClaimType claim);
std::optional<Intent> ParseIntent(std::string_view s);
std::optional<ClaimType> ParseClaimType(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_ARTIFACT_H_
