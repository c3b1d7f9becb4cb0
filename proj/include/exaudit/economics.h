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

#ifndef EXAUDIT_ECONOMICS_H_
#define EXAUDIT_ECONOMICS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "exaudit/artifact.h"
#include "exaudit/audit.h"
#include "exaudit/episodes.h"
#include "exaudit/validator.h"

namespace exaudit {

// Defaults for word_cost and audit_overhead are calibrated so that an
// accepted 17-word artifact nets about 1.70 joint welfare and a fully
// audited silent proposer nets -0.07.
struct IncentiveParams {
  double V = 1.0;  // proposer reward for an accepted proposal
  double L = 2.0;  // proposer loss when an audit fails
  double word_cost = 0.0175;
  double audit_overhead = 0.07;  // per triggered audit, borne by the validator
  double validator_approval_reward = 1.0;
  double latency_cost = 0.0;
  double opportunity_cost = 0.0;
  // Validator-side hook for accepting a non-compliant action. Off by default;
  // safety is reported separately as the bad approval rate.
  double bad_approval_penalty = 0.0;

  void Validate() const;
};

enum class Party { kProposer, kValidator };

enum class PayoffItem {
  kApprovalReward,
  kDetectionPenalty,
  kReasoningCost,
  kValidatorReward,
  kAuditOverhead,
  kBadApprovalPenalty,
};

inline constexpr int kNumPayoffItems = 6;

Party PartyOf(PayoffItem item);

struct PayoffComponent {
  PayoffItem item;
  Party party;
  double amount;  // signed contribution to the party's payoff

  bool operator==(const PayoffComponent&) const = default;
};

struct PayoffBreakdown {
  double u_s = 0.0;
  double u_r = 0.0;
  // One entry per PayoffItem, in enum order.
  std::vector<PayoffComponent> components;

  double amount(PayoffItem item) const;
  bool operator==(const PayoffBreakdown&) const = default;
};

// C(r) = word_cost * words + latency + opportunity.
double ReasoningCost(const ReasoningArtifact& artifact,
                     const IncentiveParams& params);

PayoffBreakdown Payoff(const Decision& decision, const AuditOutcome& outcome,
                       const GroundTruthState& truth, const Proposal& proposal,
                       const IncentiveParams& params);

double Welfare(const PayoffBreakdown& breakdown);

// (1 - p) V - p L - C(r^misreport)
double ExpectedMisreportUtility(const IncentiveParams& params, double p_detect,
                                double misreport_cost);

// -C(r^consistent)
double ExpectedConsistentUtility(const IncentiveParams& params,
                                 double consistent_cost);

// Smallest q in [0, 1] at which misreporting stops paying:
// p_detect(q) (V + L) >= V - C_mis + C_con, i.e. the expected misreport
// utility no longer exceeds the consistent one. p_detect comes from
// DetectionProbability. nullopt when no q <= 1 deters.
std::optional<double> DeterrenceThreshold(const IncentiveParams& params,
                                          int budget, int k_misreported,
                                          double misreport_cost = 0.0,
                                          double consistent_cost = 0.0);

std::string_view ToString(PayoffItem item);
std::optional<PayoffItem> ParsePayoffItem(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_ECONOMICS_H_
