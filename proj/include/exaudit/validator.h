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

#ifndef EXAUDIT_VALIDATOR_H_
#define EXAUDIT_VALIDATOR_H_

#include <optional>
#include <string_view>

#include "exaudit/artifact.h"
#include "exaudit/audit.h"
#include "exaudit/episodes.h"

namespace exaudit {

struct GatingConfig {
  // Required headroom below both limits for the unaudited fast path.
  double safe_margin = 0.25;
  // Whether proposals without a usable artifact may take the fast path on
  // the action's observable estimates.
  bool use_observable_estimates = true;

  void Validate() const;
};

enum class DecisionVerdict { kAccept, kReject };

enum class Route {
  kAuditPass,
  kAuditFail,
  kInconclusiveReject,
  kSafeMargin,
  kTypedClaimGate,
  kConservativeReject,
};

inline constexpr int kNumRoutes = 6;

struct Decision {
  DecisionVerdict verdict = DecisionVerdict::kReject;
  Route route = Route::kConservativeReject;

  bool accepted() const { return verdict == DecisionVerdict::kAccept; }
  bool operator==(const Decision&) const = default;
};

// The Validator's decision rule.
//
//   PASS          -> ACCEPT via AUDIT_PASS when the verified claims assert
//                    compliance, otherwise REJECT (CONSERVATIVE_REJECT)
//   FAIL          -> REJECT via AUDIT_FAIL
//   INCONCLUSIVE  -> REJECT via INCONCLUSIVE_REJECT
//   SKIPPED       -> safe-margin fast path, then typed-claim gate, then
//                    conservative rejection
//
// The fast path compares the action's estimates against
// (1 - safe_margin) * limit on both dimensions. Estimates accompanying a
// schema-complete artifact are always usable and require a declared HEDGE;
// bare estimates are usable only with use_observable_estimates.
Decision Gate(const Proposal& proposal, const AuditOutcome& outcome,
              const LimitsConfig& limits, const GatingConfig& cfg);

// Whether the action's estimates clear the fast-path margin.
bool WithinSafeMargin(const ActionDescriptor& action,
                      const LimitsConfig& limits, double safe_margin);

bool IsAcceptRoute(Route route);

std::string_view ToString(DecisionVerdict verdict);
std::string_view ToString(Route route);
std::optional<DecisionVerdict> ParseDecisionVerdict(std::string_view s);
std::optional<Route> ParseRoute(std::string_view s);

}  // namespace exaudit

#endif  // EXAUDIT_VALIDATOR_H_
