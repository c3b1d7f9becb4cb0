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

#include "exaudit/audit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "exaudit/error.h"

namespace exaudit {

void AuditPolicy::Validate() const {
  if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("q", "must lie in [0, 1]");
  if (budget < 0 || budget > kNumClaimTypes) {
    throw ConfigError("B", "audit budget must lie in [0, 4]");
  }
}

AuditDraw DrawAudit(RngStream& rng, const AuditPolicy& policy) {
  AuditDraw draw;
  draw.triggered = rng.Bernoulli(policy.q);
  if (!draw.triggered || policy.budget <= 0) return draw;

  std::array<ClaimType, kNumClaimTypes> pool = kAllClaimTypes;
  for (int i = kNumClaimTypes - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.Below(static_cast<std::uint64_t>(i) + 1));
    std::swap(pool[i], pool[j]);
  }
  const int b = std::min(policy.budget, kNumClaimTypes);
  draw.subset.assign(pool.end() - b, pool.end());
  return draw;
}

AuditOutcome RunAudit(const Proposal& proposal, const GroundTruthState& truth,
                      const AuditPolicy& policy, RngStream& rng) {
  AuditOutcome out;
  AuditDraw draw = DrawAudit(rng, policy);
  if (!draw.triggered) {
    out.status = AuditStatus::kSkipped;
    return out;
  }
  const ReasoningArtifact& artifact = proposal.artifact;
  if (policy.budget == 0 ||
      ValidateSchema(artifact, truth.limits) != SchemaVerdict::kComplete) {
    out.status = AuditStatus::kInconclusive;
    return out;
  }
  out.checked = std::move(draw.subset);
  for (ClaimType c : out.checked) {
    if (CheckClaim(c, *artifact.claims, truth, truth.limits).verdict ==
        ClaimVerdict::kInconsistent) {
      out.failed.push_back(c);
    }
  }
  out.status = out.failed.empty() ? AuditStatus::kPass : AuditStatus::kFail;
  return out;
}

long long Choose(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

double DetectionProbability(int k_misreported, const AuditPolicy& policy) {
  if (k_misreported < 0 || k_misreported > kNumClaimTypes) {
    throw UsageError("DetectionProbability: k must lie in [0, 4]");
  }
  const long long all = Choose(kNumClaimTypes, policy.budget);
  const long long clean = Choose(kNumClaimTypes - k_misreported, policy.budget);
  // Integer numerator keeps the conditional term exact for every (k, B).
  return policy.q * (static_cast<double>(all - clean) / static_cast<double>(all));
}

std::string_view ToString(AuditStatus status) {
  switch (status) {
    case AuditStatus::kPass: return "pass";
    case AuditStatus::kFail: return "fail";
    case AuditStatus::kInconclusive: return "inconclusive";
    case AuditStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::optional<AuditStatus> ParseAuditStatus(std::string_view s) {
  for (auto a : {AuditStatus::kPass, AuditStatus::kFail,
                 AuditStatus::kInconclusive, AuditStatus::kSkipped}) {
    if (ToString(a) == s) return a;
  }
  return std::nullopt;
}

}  // namespace exaudit
