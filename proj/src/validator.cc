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

#include "exaudit/validator.h"

#include <cmath>

#include "exaudit/error.h"

namespace exaudit {

void GatingConfig::Validate() const {
  if (!(safe_margin > 0.0 && safe_margin < 1.0)) {
    throw ConfigError("safe_margin", "must lie in (0, 1)");
  }
}

bool WithinSafeMargin(const ActionDescriptor& action,
                      const LimitsConfig& limits, double safe_margin) {
  const double keep = 1.0 - safe_margin;
  return action.observable_risk_estimate <= keep * limits.risk_limit &&
         std::abs(action.observable_delta_estimate) <=
             keep * limits.delta_limit;
}

bool IsAcceptRoute(Route route) {
  return route == Route::kAuditPass || route == Route::kSafeMargin ||
         route == Route::kTypedClaimGate;
}

namespace {

Decision Make(Route route) {
  return {IsAcceptRoute(route) ? DecisionVerdict::kAccept
                               : DecisionVerdict::kReject,
          route};
}

}  // namespace

Decision Gate(const Proposal& proposal, const AuditOutcome& outcome,
              const LimitsConfig& limits, const GatingConfig& cfg) {
  const bool complete =
      ValidateSchema(proposal.artifact, limits) == SchemaVerdict::kComplete;
  switch (outcome.status) {
    case AuditStatus::kPass:
      // A passed audit only verifies consistency; an honest admission of a
      // violation is still a violation.
      if (complete && AssertsCompliance(*proposal.artifact.claims)) {
        return Make(Route::kAuditPass);
      }
      return Make(Route::kConservativeReject);
    case AuditStatus::kFail:
      return Make(Route::kAuditFail);
    case AuditStatus::kInconclusive:
      return Make(Route::kInconclusiveReject);
    case AuditStatus::kSkipped:
      break;
  }

  const bool estimates_usable = complete || cfg.use_observable_estimates;
  const bool intent_ok =
      !complete || proposal.artifact.claims->intent == Intent::kHedge;
  if (estimates_usable && intent_ok &&
      WithinSafeMargin(proposal.action, limits, cfg.safe_margin)) {
    return Make(Route::kSafeMargin);
  }
  if (complete && AssertsCompliance(*proposal.artifact.claims)) {
    return Make(Route::kTypedClaimGate);
  }
  return Make(Route::kConservativeReject);
}

std::string_view ToString(DecisionVerdict verdict) {
  return verdict == DecisionVerdict::kAccept ? "accept" : "reject";
}

std::string_view ToString(Route route) {
  switch (route) {
    case Route::kAuditPass: return "audit_pass";
    case Route::kAuditFail: return "audit_fail";
    case Route::kInconclusiveReject: return "inconclusive_reject";
    case Route::kSafeMargin: return "safe_margin";
    case Route::kTypedClaimGate: return "typed_claim_gate";
    case Route::kConservativeReject: return "conservative_reject";
  }
  return "?";
}

std::optional<DecisionVerdict> ParseDecisionVerdict(std::string_view s) {
  if (s == "accept") return DecisionVerdict::kAccept;
  if (s == "reject") return DecisionVerdict::kReject;
  return std::nullopt;
}

std::optional<Route> ParseRoute(std::string_view s) {
  for (auto r : {Route::kAuditPass, Route::kAuditFail,
                 Route::kInconclusiveReject, Route::kSafeMargin,
                 Route::kTypedClaimGate, Route::kConservativeReject}) {
    if (ToString(r) == s) return r;
  }
  return std::nullopt;
}

}  // namespace exaudit
