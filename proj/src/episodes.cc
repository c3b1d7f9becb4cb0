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

#include "exaudit/episodes.h"

#include <cmath>

#include "exaudit/error.h"

namespace exaudit {
namespace {

// Uniform on [lo, hi).
double Between(RngStream& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform();
}

// Uniform on (1, kBadOvershootHigh]: reflect so the limit itself is excluded.
double Overshoot(RngStream& rng) {
  return kBadOvershootHigh - (kBadOvershootHigh - 1.0) * rng.Uniform();
}

double Signed(RngStream& rng, double magnitude) {
  return rng.Bernoulli(0.5) ? -magnitude : magnitude;
}

}  // namespace

double GroundTruthState::delta_ratio() const {
  return std::abs(true_net_delta) / limits.delta_limit;
}

bool IsCompliant(const GroundTruthState& truth) {
  return truth.true_intent == Intent::kHedge &&
         truth.true_risk <= truth.limits.risk_limit &&
         std::abs(truth.true_net_delta) <= truth.limits.delta_limit;
}

void EpisodeMix::Validate() const {
  auto check_fraction = [](double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(field, "must lie in [0, 1]");
  };
  check_fraction(p_ambiguous, "p_ambiguous");
  check_fraction(p_clear_safe, "p_clear_safe");
  check_fraction(p_bad, "p_bad");
  if (std::abs(p_ambiguous + p_clear_safe + p_bad - 1.0) > 1e-9) {
    throw ConfigError("p_ambiguous",
                      "episode mix fractions must sum to 1 (within 1e-9)");
  }
  if (!(clear_headroom > 0.0 && clear_headroom < 1.0)) {
    throw ConfigError("clear_headroom", "must lie in (0, 1)");
  }
}

ActionDescriptor ObserveAction(const GroundTruthState& truth, double offset) {
  ActionDescriptor a;
  a.observable_risk_estimate =
      truth.true_risk + offset * truth.limits.risk_limit;
  const double magnitude =
      std::abs(truth.true_net_delta) + offset * truth.limits.delta_limit;
  a.observable_delta_estimate =
      std::signbit(truth.true_net_delta) ? -magnitude : magnitude;
  return a;
}

GroundTruthState GenerateEpisode(RngStream& rng, const EpisodeMix& mix,
                                 const LimitsConfig& limits) {
  mix.Validate();
  GroundTruthState s;
  s.limits = limits;
  const double rl = limits.risk_limit;
  const double dl = limits.delta_limit;

  const double u = rng.Uniform();
  if (u < mix.p_ambiguous) {
    s.klass = EpisodeClass::kAmbiguousGood;
    s.true_intent = Intent::kHedge;
    s.true_risk = Between(rng, kAmbiguousBandLow, 1.0) * rl;
    s.true_net_delta = Signed(rng, Between(rng, kAmbiguousBandLow, 1.0) * dl);
  } else if (u < mix.p_ambiguous + mix.p_clear_safe) {
    s.klass = EpisodeClass::kClearSafe;
    s.true_intent = Intent::kHedge;
    const double top = 1.0 - mix.clear_headroom;
    s.true_risk = Between(rng, 0.0, top) * rl;
    s.true_net_delta = Signed(rng, Between(rng, 0.0, top) * dl);
  } else {
    s.klass = EpisodeClass::kBad;
    // Non-violated dimensions sit in the near-boundary band, so the action
    // alone never reveals which BAD states are which.
    switch (rng.Below(3)) {
      case 0:
        s.violation = Violation::kRisk;
        s.true_intent = Intent::kHedge;
        s.true_risk = Overshoot(rng) * rl;
        s.true_net_delta =
            Signed(rng, Between(rng, kAmbiguousBandLow, 1.0) * dl);
        break;
      case 1:
        s.violation = Violation::kDelta;
        s.true_intent = Intent::kHedge;
        s.true_risk = Between(rng, kAmbiguousBandLow, 1.0) * rl;
        s.true_net_delta = Signed(rng, Overshoot(rng) * dl);
        break;
      default:
        s.violation = Violation::kIntent;
        s.true_intent = Intent::kSpeculate;
        s.true_risk = Between(rng, kAmbiguousBandLow, 1.0) * rl;
        s.true_net_delta =
            Signed(rng, Between(rng, kAmbiguousBandLow, 1.0) * dl);
        break;
    }
  }
  return s;
}

GroundTruthState GenerateEpisodeAt(std::uint64_t seed, std::uint64_t index,
                                   const EpisodeMix& mix,
                                   const LimitsConfig& limits) {
  RngStream rng(seed, index, StreamTag::kEpisode);
  return GenerateEpisode(rng, mix, limits);
}

std::vector<GroundTruthState> GenerateBatch(std::uint64_t seed, std::size_t n,
                                            const EpisodeMix& mix,
                                            const LimitsConfig& limits) {
  if (n < 1) throw UsageError("GenerateBatch: n must be at least 1");
  mix.Validate();
  limits.Validate();
  std::vector<GroundTruthState> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(GenerateEpisodeAt(seed, i, mix, limits));
  }
  return out;
}

std::string_view ToString(EpisodeClass klass) {
  switch (klass) {
    case EpisodeClass::kAmbiguousGood: return "AMBIGUOUS_GOOD";
    case EpisodeClass::kClearSafe: return "CLEAR_SAFE";
    case EpisodeClass::kBad: return "BAD";
  }
  return "?";
}

std::string_view ToString(Violation violation) {
  switch (violation) {
    case Violation::kNone: return "none";
    case Violation::kRisk: return "risk";
    case Violation::kDelta: return "delta";
    case Violation::kIntent: return "intent";
  }
  return "?";
}

std::optional<EpisodeClass> ParseEpisodeClass(std::string_view s) {
  for (auto k : {EpisodeClass::kAmbiguousGood, EpisodeClass::kClearSafe,
                 EpisodeClass::kBad}) {
    if (ToString(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<Violation> ParseViolation(std::string_view s) {
  for (auto v : {Violation::kNone, Violation::kRisk, Violation::kDelta,
                 Violation::kIntent}) {
    if (ToString(v) == s) return v;
  }
  return std::nullopt;
}

}  // namespace exaudit
