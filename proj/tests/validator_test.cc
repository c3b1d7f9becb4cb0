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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exaudit/audit.h"
#include "exaudit/episodes.h"
#include "exaudit/error.h"
#include "exaudit/policies.h"
#include "exaudit/rng.h"
#include "exaudit/validator.h"

namespace exaudit {
namespace {

GroundTruthState State(double risk, double delta,
                       Intent intent = Intent::kHedge) {
  GroundTruthState s;
  s.true_risk = risk;
  s.true_net_delta = delta;
  s.true_intent = intent;
  s.klass = IsCompliant(s) ? EpisodeClass::kAmbiguousGood : EpisodeClass::kBad;
  return s;
}

AuditOutcome Status(AuditStatus st) {
  AuditOutcome o;
  o.status = st;
  return o;
}

const LimitsConfig kLimits;
const GatingConfig kGating;

TEST_CASE("gate examples") {
  SUBCASE("audit pass accepts") {
    const auto s = State(0.95, 0.3);
    AuditOutcome o = Status(AuditStatus::kPass);
    o.checked = {ClaimType::kIntent};
    const auto d = Gate(ProposeTruthful(s), o, kLimits, kGating);
    CHECK(d.verdict == DecisionVerdict::kAccept);
    CHECK(d.route == Route::kAuditPass);
  }
  SUBCASE("silent inconclusive rejects") {
    const auto s = State(0.95, 0.3);
    const auto d = Gate(ProposeSilent(s), Status(AuditStatus::kInconclusive),
                        kLimits, kGating);
    CHECK(d.verdict == DecisionVerdict::kReject);
    CHECK(d.route == Route::kInconclusiveReject);
  }
  SUBCASE("silent skipped with headroom takes the fast path") {
    const auto s = State(0.6, 0.6);
    const auto d = Gate(ProposeSilent(s), Status(AuditStatus::kSkipped),
                        kLimits, kGating);
    CHECK(d.verdict == DecisionVerdict::kAccept);
    CHECK(d.route == Route::kSafeMargin);
  }
  SUBCASE("ambiguous truthful skipped goes through the typed-claim gate") {
    const auto s = State(0.95, 0.3);
    const auto d = Gate(ProposeTruthful(s), Status(AuditStatus::kSkipped),
                        kLimits, kGating);
    CHECK(d.verdict == DecisionVerdict::kAccept);
    CHECK(d.route == Route::kTypedClaimGate);
  }
  SUBCASE("audit fail rejects") {
    const auto s = State(1.1, 0.3);
    AuditOutcome o = Status(AuditStatus::kFail);
    o.checked = o.failed = {ClaimType::kRiskWithinLimit};
    const auto d = Gate(ProposeMisreport(s), o, kLimits, kGating);
    CHECK(d.verdict == DecisionVerdict::kReject);
    CHECK(d.route == Route::kAuditFail);
  }
  SUBCASE("a truthful admission of a violation is rejected") {
    const auto s = State(1.1, 0.3);
    for (auto st : {AuditStatus::kPass, AuditStatus::kSkipped}) {
      const auto d = Gate(ProposeTruthful(s), Status(st), kLimits, kGating);
      CHECK(d.verdict == DecisionVerdict::kReject);
      CHECK(d.route == Route::kConservativeReject);
    }
  }
  SUBCASE("silent near the boundary is conservatively rejected") {
    const auto s = State(0.95, 0.3);
    const auto d = Gate(ProposeSilent(s), Status(AuditStatus::kSkipped),
                        kLimits, kGating);
    CHECK(d.route == Route::kConservativeReject);
  }
  SUBCASE("bare estimates are ignored when disabled") {
    const auto s = State(0.1, 0.1);
    GatingConfig g = kGating;
    g.use_observable_estimates = false;
    const auto d =
        Gate(ProposeSilent(s), Status(AuditStatus::kSkipped), kLimits, g);
    CHECK(d.route == Route::kConservativeReject);
  }
  SUBCASE("a declared SPECULATE never takes the fast path") {
    const auto s = State(0.1, 0.1, Intent::kSpeculate);
    const auto d = Gate(ProposeTruthful(s), Status(AuditStatus::kSkipped),
                        kLimits, kGating);
    CHECK(d.route == Route::kConservativeReject);
  }
}

TEST_CASE("safe margin boundary") {
  ActionDescriptor a{0.75, -0.75};
  CHECK(WithinSafeMargin(a, kLimits, 0.25));
  a.observable_delta_estimate = -0.7500001;
  CHECK_FALSE(WithinSafeMargin(a, kLimits, 0.25));
}

TEST_CASE("ambiguous states never clear the fast path") {
  EpisodeMix mix{1.0, 0.0, 0.0, 0.25};
  for (double margin : {0.09, 0.1, 0.25, 0.5, 0.99}) {
    GatingConfig g{margin, true};
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const auto s = GenerateEpisodeAt(5, i, mix, kLimits);
      for (const Proposal& p : {ProposeSilent(s), ProposeTruthful(s)}) {
        CHECK(Gate(p, Status(AuditStatus::kSkipped), kLimits, g).route !=
              Route::kSafeMargin);
      }
    }
  }
}

TEST_CASE("exactly one route; verdict follows the route") {
  EpisodeMix mix;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    const auto s = GenerateEpisodeAt(9, i, mix, kLimits);
    std::vector<Proposal> proposals = {ProposeSilent(s), ProposeTruthful(s)};
    if (!IsCompliant(s)) proposals.push_back(ProposeMisreport(s));
    for (const auto& p : proposals) {
      for (auto st : {AuditStatus::kPass, AuditStatus::kFail,
                      AuditStatus::kInconclusive, AuditStatus::kSkipped}) {
        const auto d = Gate(p, Status(st), kLimits, kGating);
        CHECK(d.accepted() == IsAcceptRoute(d.route));
        if (st == AuditStatus::kFail) CHECK(d.route == Route::kAuditFail);
        if (st == AuditStatus::kInconclusive) {
          CHECK(d.route == Route::kInconclusiveReject);
        }
        if (!p.artifact.claims && st != AuditStatus::kSkipped) {
          CHECK_FALSE(d.accepted());
        }
      }
    }
  }
}

TEST_CASE("a triggered audit of a silent proposal always rejects") {
  EpisodeMix mix;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto s = GenerateEpisodeAt(13, i, mix, kLimits);
    const Proposal p = ProposeSilent(s);
    RngStream rng(13, i, StreamTag::kAudit);
    const auto out = RunAudit(p, s, {1.0, static_cast<int>(i % 5)}, rng);
    CHECK_FALSE(Gate(p, out, kLimits, kGating).accepted());
  }
}

TEST_CASE("route names round trip") {
  for (int r = 0; r < kNumRoutes; ++r) {
    const auto route = static_cast<Route>(r);
    CHECK(ParseRoute(ToString(route)) == route);
  }
  CHECK(ToString(Route::kTypedClaimGate) == "typed_claim_gate");
  CHECK_FALSE(ParseRoute("fast").has_value());
}

TEST_CASE("gating validation") {
  CHECK_THROWS_AS((GatingConfig{-0.1, true}.Validate()), ConfigError);
  CHECK_THROWS_AS((GatingConfig{1.5, true}.Validate()), ConfigError);
}

}  // namespace
}  // namespace exaudit
