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

#include "exaudit/policies.h"

#include <algorithm>
#include <cmath>

#include "exaudit/error.h"

namespace exaudit {

void ProposerPolicy::Validate(const LimitsConfig& limits) const {
  if (!(cheat_rate >= 0.0 && cheat_rate <= 1.0)) {
    throw ConfigError("cheat_rate", "must lie in [0, 1]");
  }
  if (target_words < 0 || target_words > limits.max_words) {
    throw ConfigError("target_words", "must lie in [0, max_words]");
  }
  if (misreport_words &&
      (*misreport_words < 0 || *misreport_words > limits.max_words)) {
    throw ConfigError("misreport_words", "must lie in [0, max_words]");
  }
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw ConfigError("confidence", "must lie in [0, 1]");
  }
  if (!std::isfinite(observation_offset)) {
    throw ConfigError("observation_offset", "must be finite");
  }
}

Proposal ProposeTruthful(const GroundTruthState& truth,
                         const ProposerPolicy& policy) {
  Proposal p;
  p.action = ObserveAction(truth, policy.observation_offset);
  p.artifact.claims = TruthfulClaims(truth, truth.limits, policy.confidence);
  p.artifact.text_word_count = policy.target_words;
  return p;
}

Proposal ProposeSilent(const GroundTruthState& truth,
                       const ProposerPolicy& policy) {
  Proposal p;
  p.action = ObserveAction(truth, policy.observation_offset);
  return p;
}

Proposal ProposeMisreport(const GroundTruthState& truth,
                          const ProposerPolicy& policy) {
  if (IsCompliant(truth)) {
    throw UsageError("ProposeMisreport: state is compliant");
  }
  Proposal p;
  p.action = ObserveAction(truth, policy.observation_offset);
  p.artifact.claims = ClaimSet{Intent::kHedge, true, true, policy.confidence};
  p.artifact.text_word_count = policy.misreport_word_count();
  return p;
}

int MisreportCount(const GroundTruthState& truth) {
  return CountInconsistent(ClaimSet{Intent::kHedge, true, true, 0.9}, truth,
                           truth.limits);
}

bool BestResponseMisreports(const GroundTruthState& truth,
                            const IncentiveParams& incentives,
                            const AuditPolicy& audit,
                            const ProposerPolicy& policy) {
  if (IsCompliant(truth)) return false;
  const double p = DetectionProbability(MisreportCount(truth), audit);

  ReasoningArtifact lie;
  lie.text_word_count = policy.misreport_word_count();
  ReasoningArtifact honest;
  honest.text_word_count = policy.target_words;

  const double gain =
      ExpectedMisreportUtility(incentives, p,
                               ReasoningCost(lie, incentives)) -
      ExpectedConsistentUtility(incentives, ReasoningCost(honest, incentives));
  const double tol =
      1e-12 * std::max({1.0, std::abs(incentives.V), std::abs(incentives.L)});
  return gain > tol;
}

Proposal ProposeBestResponse(const GroundTruthState& truth,
                             const IncentiveParams& incentives,
                             const AuditPolicy& audit,
                             const ProposerPolicy& policy) {
  if (BestResponseMisreports(truth, incentives, audit, policy)) {
    return ProposeMisreport(truth, policy);
  }
  return ProposeTruthful(truth, policy);
}

Proposal ProposeFixedCheater(const GroundTruthState& truth, double cheat_rate,
                             RngStream& rng, const ProposerPolicy& policy) {
  if (!IsCompliant(truth) && rng.Bernoulli(cheat_rate)) {
    return ProposeMisreport(truth, policy);
  }
  return ProposeTruthful(truth, policy);
}

PolicyAction Propose(const ProposerPolicy& policy,
                     const GroundTruthState& truth,
                     const IncentiveParams& incentives,
                     const AuditPolicy& audit, RngStream& rng) {
  PolicyAction out;
  switch (policy.kind) {
    case PolicyKind::kTruthful:
      out.proposal = ProposeTruthful(truth, policy);
      break;
    case PolicyKind::kSilent:
      out.proposal = ProposeSilent(truth, policy);
      break;
    case PolicyKind::kFixedCheater:
      out.proposal = ProposeFixedCheater(truth, policy.cheat_rate, rng, policy);
      out.misreported = !IsCompliant(truth) &&
                        out.proposal.artifact.claims.has_value() &&
                        AssertsCompliance(*out.proposal.artifact.claims);
      break;
    case PolicyKind::kBestResponse:
      out.misreported =
          BestResponseMisreports(truth, incentives, audit, policy);
      out.proposal = out.misreported ? ProposeMisreport(truth, policy)
                                     : ProposeTruthful(truth, policy);
      break;
  }
  return out;
}

std::string_view ToString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kTruthful: return "truthful";
    case PolicyKind::kSilent: return "silent";
    case PolicyKind::kFixedCheater: return "fixed_cheater";
    case PolicyKind::kBestResponse: return "best_response";
  }
  return "?";
}

std::optional<PolicyKind> ParsePolicyKind(std::string_view s) {
  for (auto k : {PolicyKind::kTruthful, PolicyKind::kSilent,
                 PolicyKind::kFixedCheater, PolicyKind::kBestResponse}) {
    if (ToString(k) == s) return k;
  }
  return std::nullopt;
}

}  // namespace exaudit
