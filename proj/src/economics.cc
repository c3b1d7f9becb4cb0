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

#include "exaudit/economics.h"

#include <cmath>

#include "exaudit/error.h"

namespace exaudit {

void IncentiveParams::Validate() const {
  if (!(V > 0.0)) throw ConfigError("V", "must be positive");
  if (!(L > 0.0)) throw ConfigError("L", "must be positive");
  if (!(word_cost >= 0.0)) throw ConfigError("word_cost", "must be >= 0");
  if (!(audit_overhead >= 0.0)) {
    throw ConfigError("audit_overhead", "must be >= 0");
  }
  if (!std::isfinite(validator_approval_reward)) {
    throw ConfigError("validator_approval_reward", "must be finite");
  }
  if (!std::isfinite(latency_cost)) {
    throw ConfigError("latency_cost", "must be finite");
  }
  if (!std::isfinite(opportunity_cost)) {
    throw ConfigError("opportunity_cost", "must be finite");
  }
  if (!(bad_approval_penalty >= 0.0)) {
    throw ConfigError("bad_approval_penalty", "must be >= 0");
  }
}

Party PartyOf(PayoffItem item) {
  switch (item) {
    case PayoffItem::kApprovalReward:
    case PayoffItem::kDetectionPenalty:
    case PayoffItem::kReasoningCost:
      return Party::kProposer;
    default:
      return Party::kValidator;
  }
}

double PayoffBreakdown::amount(PayoffItem item) const {
  for (const auto& c : components) {
    if (c.item == item) return c.amount;
  }
  return 0.0;
}

double ReasoningCost(const ReasoningArtifact& artifact,
                     const IncentiveParams& params) {
  return params.word_cost * artifact.text_word_count + params.latency_cost +
         params.opportunity_cost;
}

PayoffBreakdown Payoff(const Decision& decision, const AuditOutcome& outcome,
                       const GroundTruthState& truth, const Proposal& proposal,
                       const IncentiveParams& params) {
  const bool accepted = decision.accepted();
  const bool failed = outcome.status == AuditStatus::kFail;

  PayoffBreakdown b;
  b.components = {
      {PayoffItem::kApprovalReward, Party::kProposer,
       accepted ? params.V : 0.0},
      {PayoffItem::kDetectionPenalty, Party::kProposer,
       failed ? -params.L : 0.0},
      {PayoffItem::kReasoningCost, Party::kProposer,
       -ReasoningCost(proposal.artifact, params)},
      {PayoffItem::kValidatorReward, Party::kValidator,
       accepted ? params.validator_approval_reward : 0.0},
      // Charged on every triggered audit, whatever the decision.
      {PayoffItem::kAuditOverhead, Party::kValidator,
       outcome.triggered() ? -params.audit_overhead : 0.0},
      {PayoffItem::kBadApprovalPenalty, Party::kValidator,
       accepted && !IsCompliant(truth) ? -params.bad_approval_penalty : 0.0},
  };
  for (const auto& c : b.components) {
    (c.party == Party::kProposer ? b.u_s : b.u_r) += c.amount;
  }
  return b;
}

double Welfare(const PayoffBreakdown& breakdown) {
  return breakdown.u_s + breakdown.u_r;
}

double ExpectedMisreportUtility(const IncentiveParams& params, double p_detect,
                                double misreport_cost) {
  return (1.0 - p_detect) * params.V - p_detect * params.L - misreport_cost;
}

double ExpectedConsistentUtility(const IncentiveParams& /*params*/,
                                 double consistent_cost) {
  return -consistent_cost;
}

std::optional<double> DeterrenceThreshold(const IncentiveParams& params,
                                          int budget, int k_misreported,
                                          double misreport_cost,
                                          double consistent_cost) {
  if (k_misreported < 1) {
    throw UsageError("DeterrenceThreshold: k must be at least 1");
  }
  // Misreporting loses once (1 - p) V - p L - C_mis <= -C_con.
  const double gain = params.V - misreport_cost + consistent_cost;
  if (gain <= 0.0) return 0.0;
  // p_detect is linear in q; its slope is the detection probability at q = 1.
  const double slope =
      DetectionProbability(k_misreported, AuditPolicy{1.0, budget});
  if (slope <= 0.0) return std::nullopt;
  const double q_star = gain / (slope * (params.V + params.L));
  if (q_star > 1.0) return std::nullopt;
  return q_star;
}

std::string_view ToString(PayoffItem item) {
  switch (item) {
    case PayoffItem::kApprovalReward: return "approval_reward";
    case PayoffItem::kDetectionPenalty: return "detection_penalty";
    case PayoffItem::kReasoningCost: return "reasoning_cost";
    case PayoffItem::kValidatorReward: return "validator_reward";
    case PayoffItem::kAuditOverhead: return "audit_overhead";
    case PayoffItem::kBadApprovalPenalty: return "bad_approval_penalty";
  }
  return "?";
}

std::optional<PayoffItem> ParsePayoffItem(std::string_view s) {
  for (auto i : {PayoffItem::kApprovalReward, PayoffItem::kDetectionPenalty,
                 PayoffItem::kReasoningCost, PayoffItem::kValidatorReward,
                 PayoffItem::kAuditOverhead, PayoffItem::kBadApprovalPenalty}) {
    if (ToString(i) == s) return i;
  }
  return std::nullopt;
}

}  // namespace exaudit
