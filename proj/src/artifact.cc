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

#include "exaudit/artifact.h"

#include <cmath>

#include "exaudit/episodes.h"
#include "exaudit/error.h"

namespace exaudit {

void LimitsConfig::Validate() const {
  if (!(risk_limit > 0.0) || !std::isfinite(risk_limit)) {
    throw ConfigError("risk_limit", "must be a positive finite number");
  }
  if (!(delta_limit > 0.0) || !std::isfinite(delta_limit)) {
    throw ConfigError("delta_limit", "must be a positive finite number");
  }
  if (max_words < 1) throw ConfigError("max_words", "must be at least 1");
}

SchemaVerdict ValidateSchema(const ReasoningArtifact& artifact,
                             const LimitsConfig& limits) {
  if (!artifact.claims.has_value()) return SchemaVerdict::kIncomplete;
  const double c = artifact.claims->confidence;
  if (!(c >= 0.0 && c <= 1.0)) return SchemaVerdict::kIncomplete;
  if (artifact.text_word_count < 0 ||
      artifact.text_word_count > limits.max_words) {
    return SchemaVerdict::kIncomplete;
  }
  return SchemaVerdict::kComplete;
}

ClaimCheckResult CheckClaim(ClaimType claim, const ClaimSet& claims,
                            const GroundTruthState& truth,
                            const LimitsConfig& limits) {
  bool consistent = true;
  switch (claim) {
    case ClaimType::kIntent:
      consistent = claims.intent == truth.true_intent;
      break;
    case ClaimType::kRiskWithinLimit:
      consistent = claims.risk_within_limit ==
                   (truth.true_risk <= limits.risk_limit);
      break;
    case ClaimType::kNetDeltaBounded:
      consistent = claims.net_delta_bounded ==
                   (std::abs(truth.true_net_delta) <= limits.delta_limit);
      break;
    case ClaimType::kConfidence:
      consistent = claims.confidence >= 0.0 && claims.confidence <= 1.0;
      break;
  }
  return {claim, consistent ? ClaimVerdict::kConsistent : ClaimVerdict::kInconsistent};
}

int CountInconsistent(const ClaimSet& claims, const GroundTruthState& truth,
                      const LimitsConfig& limits) {
  int k = 0;
  for (ClaimType c : kAllClaimTypes) {
    if (CheckClaim(c, claims, truth, limits).verdict == ClaimVerdict::kInconsistent) {
      ++k;
    }
  }
  return k;
}

ClaimSet TruthfulClaims(const GroundTruthState& truth,
                        const LimitsConfig& limits, double confidence) {
  ClaimSet c;
  c.intent = truth.true_intent;
  c.risk_within_limit = truth.true_risk <= limits.risk_limit;
  c.net_delta_bounded = std::abs(truth.true_net_delta) <= limits.delta_limit;
  c.confidence = confidence;
  return c;
}

bool AssertsCompliance(const ClaimSet& claims) {
  return claims.intent == Intent::kHedge && claims.risk_within_limit &&
         claims.net_delta_bounded;
}

std::string_view ToString(Intent intent) {
  return intent == Intent::kHedge ? "HEDGE" : "SPECULATE";
}

std::string_view ToString(ClaimType claim) {
  switch (claim) {
    case ClaimType::kIntent: return "intent";
    case ClaimType::kRiskWithinLimit: return "risk_within_limit";
    case ClaimType::kNetDeltaBounded: return "net_delta_bounded";
    case ClaimType::kConfidence: return "confidence";
  }
  return "?";
}

std::optional<Intent> ParseIntent(std::string_view s) {
  if (s == "HEDGE") return Intent::kHedge;
  if (s == "SPECULATE") return Intent::kSpeculate;
  return std::nullopt;
}

std::optional<ClaimType> ParseClaimType(std::string_view s) {
  for (ClaimType c : kAllClaimTypes) {
    if (ToString(c) == s) return c;
  }
  return std::nullopt;
}

}  // namespace exaudit
