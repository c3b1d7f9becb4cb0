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

#ifndef EXAUDIT_POLICIES_H_
#define EXAUDIT_POLICIES_H_

#include <optional>
#include <string_view>

#include "exaudit/audit.h"
#include "exaudit/economics.h"
#include "exaudit/episodes.h"
#include "exaudit/rng.h"

namespace exaudit {

enum class PolicyKind { kTruthful, kSilent, kFixedCheater, kBestResponse };

struct ProposerPolicy {
  PolicyKind kind = PolicyKind::kTruthful;
  double cheat_rate = 0.0;  // FIXED_CHEATER only
  int target_words = 17;
  // Length of a misreporting artifact; defaults to target_words.
  std::optional<int> misreport_words;
  double confidence = 0.9;
  // Outward shift of the action's observable estimates, in limit units.
  double observation_offset = 0.0;

  int misreport_word_count() const {
    return misreport_words.value_or(target_words);
  }
  void Validate(const LimitsConfig& limits) const;
};

Proposal ProposeTruthful(const GroundTruthState& truth,
                         const ProposerPolicy& policy = {});

Proposal ProposeSilent(const GroundTruthState& truth,
                       const ProposerPolicy& policy = {});

// Claims full compliance regardless of the state. Throws UsageError on a
// compliant state.
Proposal ProposeMisreport(const GroundTruthState& truth,
                          const ProposerPolicy& policy = {});

// Number of claims the compliance-asserting misreport would get wrong.
int MisreportCount(const GroundTruthState& truth);

// Expected-utility comparison for a BAD state. Exact indifference (within
// rounding) resolves to truthful reporting.
bool BestResponseMisreports(const GroundTruthState& truth,
                            const IncentiveParams& incentives,
                            const AuditPolicy& audit,
                            const ProposerPolicy& policy = {});

Proposal ProposeBestResponse(const GroundTruthState& truth,
                             const IncentiveParams& incentives,
                             const AuditPolicy& audit,
                             const ProposerPolicy& policy = {});

Proposal ProposeFixedCheater(const GroundTruthState& truth, double cheat_rate,
                             RngStream& rng, const ProposerPolicy& policy = {});

struct PolicyAction {
  Proposal proposal;
  bool misreported = false;
};

// Dispatch on policy.kind. `rng` is the episode's policy stream.
PolicyAction Propose(const ProposerPolicy& policy,
                     const GroundTruthState& truth,
                     const IncentiveParams& incentives,
                     const AuditPolicy& audit, RngStream& rng);

std::string_view ToString(PolicyKind kind);
std::optional<PolicyKind> ParsePolicyKind(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_POLICIES_H_
