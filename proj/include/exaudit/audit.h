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

#ifndef EXAUDIT_AUDIT_H_
#define EXAUDIT_AUDIT_H_

#include <optional>
#include <string_view>
#include <vector>

#include "exaudit/artifact.h"
#include "exaudit/episodes.h"
#include "exaudit/rng.h"

namespace exaudit {

// Bounded verification policy: trigger with probability q, then check
// `budget` claim types sampled uniformly without replacement.
struct AuditPolicy {
  double q = 0.3;
  int budget = kNumClaimTypes;

  void Validate() const;
};

enum class AuditStatus { kPass, kFail, kInconclusive, kSkipped };

struct AuditOutcome {
  AuditStatus status = AuditStatus::kSkipped;
  std::vector<ClaimType> checked;  // in sampling order
  std::vector<ClaimType> failed;   // subsequence of `checked`

  bool triggered() const { return status != AuditStatus::kSkipped; }
  bool operator==(const AuditOutcome&) const = default;
};

// The random part of an audit, separated from evaluation so that the
// sampling machinery can be tested against subset enumeration directly.
struct AuditDraw {
  bool triggered = false;
  std::vector<ClaimType> subset;  // empty unless triggered and budget > 0
};

// One uniform draw decides the trigger; if triggered, a Fisher-Yates shuffle
// of the candidate set supplies the subset as its last `budget` entries.
// The shuffle fills the tail first, so on a shared stream the subset for
// budget B is contained in the subset for budget B + 1.
AuditDraw DrawAudit(RngStream& rng, const AuditPolicy& policy);

AuditOutcome RunAudit(const Proposal& proposal, const GroundTruthState& truth,
                      const AuditPolicy& policy, RngStream& rng);

// Probability that the audit triggers and samples at least one of
// `k_misreported` inconsistent claims: q * (1 - C(4-k, B) / C(4, B)).
double DetectionProbability(int k_misreported, const AuditPolicy& policy);

// Binomial coefficient with C(n, r) = 0 for r > n or r < 0.
long long Choose(int n, int r);

std::string_view ToString(AuditStatus status);
std::optional<AuditStatus> ParseAuditStatus(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_AUDIT_H_
