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

#include "exaudit/analytic.h"

#include <algorithm>

#include "exaudit/error.h"

namespace exaudit {
namespace {

// A slice of the episode distribution with its metric ranges (fractions of
// the limit) and a representative state for claim-level questions.
struct Segment {
  double weight;
  GroundTruthState rep;
  double risk_lo, risk_hi;
  double delta_lo, delta_hi;
};

struct Expectation {
  double accept = 0.0;
  double safe_margin = 0.0;
  double typed_gate = 0.0;
  double fail = 0.0;
  double words = 0.0;
  double welfare = 0.0;

  Expectation& Blend(const Expectation& o, double w) {
    accept += w * o.accept;
    safe_margin += w * o.safe_margin;
    typed_gate += w * o.typed_gate;
    fail += w * o.fail;
    words += w * o.words;
    welfare += w * o.welfare;
    return *this;
  }
};

GroundTruthState Rep(Intent intent, double risk, double delta,
                     EpisodeClass klass, Violation v,
                     const LimitsConfig& limits) {
  GroundTruthState s;
  s.true_intent = intent;
  s.true_risk = risk * limits.risk_limit;
  s.true_net_delta = delta * limits.delta_limit;
  s.klass = klass;
  s.violation = v;
  s.limits = limits;
  return s;
}

std::vector<Segment> Segments(const RunConfig& cfg) {
  const LimitsConfig& lim = cfg.limits;
  const double lo = kAmbiguousBandLow;
  const double hi = kBadOvershootHigh;
  const double top = 1.0 - cfg.mix.clear_headroom;
  const double third = cfg.mix.p_bad / 3.0;
  return {
      {cfg.mix.p_ambiguous,
       Rep(Intent::kHedge, 0.96, 0.96, EpisodeClass::kAmbiguousGood,
           Violation::kNone, lim),
       lo, 1.0, lo, 1.0},
      {cfg.mix.p_clear_safe,
       Rep(Intent::kHedge, top / 2, top / 2, EpisodeClass::kClearSafe,
           Violation::kNone, lim),
       0.0, top, 0.0, top},
      {third,
       Rep(Intent::kHedge, 1.1, 0.96, EpisodeClass::kBad, Violation::kRisk,
           lim),
       1.0, hi, lo, 1.0},
      {third,
       Rep(Intent::kHedge, 0.96, 1.1, EpisodeClass::kBad, Violation::kDelta,
           lim),
       lo, 1.0, 1.0, hi},
      {third,
       Rep(Intent::kSpeculate, 0.96, 0.96, EpisodeClass::kBad,
           Violation::kIntent, lim),
       lo, 1.0, lo, 1.0},
  };
}

// P(U[lo, hi) + offset <= 1 - safe_margin).
double BelowMargin(double lo, double hi, const RunConfig& cfg) {
  const double cut =
      1.0 - cfg.gating.safe_margin - cfg.policy.observation_offset;
  return std::clamp((cut - lo) / (hi - lo), 0.0, 1.0);
}

enum class Kind { kSilent, kTruthful, kMisreport };

Expectation Evaluate(Kind kind, const Segment& s, const RunConfig& cfg) {
  const double q = cfg.audit.q;
  const bool has_budget = cfg.audit.budget > 0;
  const double fast = BelowMargin(s.risk_lo, s.risk_hi, cfg) *
                      BelowMargin(s.delta_lo, s.delta_hi, cfg);
  const IncentiveParams& inc = cfg.incentives;

  Expectation e;
  int words = 0;
  switch (kind) {
    case Kind::kSilent:
      e.safe_margin = (1.0 - q) * (cfg.gating.use_observable_estimates ? fast : 0.0);
      break;
    case Kind::kTruthful: {
      const ClaimSet claims =
          TruthfulClaims(s.rep, cfg.limits, cfg.policy.confidence);
      const bool asserts = AssertsCompliance(claims);
      e.safe_margin = claims.intent == Intent::kHedge ? (1.0 - q) * fast : 0.0;
      e.typed_gate = asserts ? (1.0 - q) - e.safe_margin : 0.0;
      e.accept = (has_budget && asserts) ? q : 0.0;
      words = cfg.policy.target_words;
      break;
    }
    case Kind::kMisreport:
      e.safe_margin = (1.0 - q) * fast;
      e.typed_gate = (1.0 - q) - e.safe_margin;
      e.fail = DetectionProbability(MisreportCount(s.rep), cfg.audit);
      e.accept = has_budget ? q - e.fail : 0.0;
      words = cfg.policy.misreport_word_count();
      break;
  }
  e.accept += e.safe_margin + e.typed_gate;
  e.words = words;

  ReasoningArtifact sized;
  sized.text_word_count = words;
  const double penalty = IsCompliant(s.rep) ? 0.0 : inc.bad_approval_penalty;
  e.welfare = (inc.V + inc.validator_approval_reward - penalty) * e.accept -
              inc.L * e.fail - ReasoningCost(sized, inc) -
              inc.audit_overhead * q;
  return e;
}

double MisreportShare(const Segment& s, const RunConfig& cfg) {
  if (IsCompliant(s.rep)) return 0.0;
  switch (cfg.policy.kind) {
    case PolicyKind::kFixedCheater:
      return cfg.policy.cheat_rate;
    case PolicyKind::kBestResponse:
      return BestResponseMisreports(s.rep, cfg.incentives, cfg.audit,
                                    cfg.policy)
                 ? 1.0
                 : 0.0;
    default:
      return 0.0;
  }
}

double SafeRatio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

const Prediction& AnalyticReport::Get(const std::string& name) const {
  for (const auto& p : predictions) {
    if (p.name == name) return p;
  }
  throw UsageError("AnalyticReport: unknown prediction " + name);
}

AnalyticReport Analyze(const RunConfig& cfg) {
  cfg.Validate();
  const std::vector<Segment> segments = Segments(cfg);

  Expectation all, ambiguous, clear, bad;
  double misreport = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    Expectation e;
    if (cfg.policy.kind == PolicyKind::kSilent) {
      e = Evaluate(Kind::kSilent, s, cfg);
    } else {
      const double m = MisreportShare(s, cfg);
      e.Blend(Evaluate(Kind::kTruthful, s, cfg), 1.0 - m);
      if (m > 0.0) e.Blend(Evaluate(Kind::kMisreport, s, cfg), m);
      misreport += s.weight * m;
    }
    all.Blend(e, s.weight);
    if (i == 0) ambiguous = e;
    if (i == 1) clear = e;
    if (i >= 2) bad.Blend(e, s.weight);
  }
  const double p_bad = cfg.mix.p_bad;
  const double q = cfg.audit.q;
  const double n = static_cast<double>(cfg.episodes_per_seed);

  AnalyticReport r;
  auto add = [&r](std::string name, double v, std::string formula) {
    r.predictions.push_back({std::move(name), v, std::move(formula)});
  };
  add("approval", all.accept,
      "sum_s w_s [ (1-q)(fast_s + typed_s) + q * pass_accept_s ]");
  add("ambig_approval", ambiguous.accept,
      "(1-q)[hedge-declared or silent-with-estimates fast path + typed gate] "
      "+ q*[B>0]*P(pass)");
  add("clear_safe_approval", clear.accept, "same rule on clear-safe states");
  add("bad_approval", SafeRatio(bad.accept, all.accept),
      "P(accept and BAD) / P(accept)");
  add("audit_fail", SafeRatio(all.fail, q),
      "P(fail) / q,  P(fail) = P(misreport) * q * (1 - C(4-k,B)/C(4,B))");
  add("detection_rate_bad", SafeRatio(bad.fail, p_bad),
      "q * (1 - C(4-k,B)/C(4,B)) * P(misreport | BAD)");
  add("misreport_rate_bad", SafeRatio(misreport, p_bad),
      "cheat_rate, or [q < q*] for the best responder");
  add("mean_welfare", all.welfare,
      "(V + v_r - pen*[BAD]) P(accept) - L P(fail) - C(r) - overhead * q");
  add("ambig_welfare", ambiguous.welfare, "mean_welfare restricted to ambiguous");
  add("mean_words", all.words, "E[text_word_count]");
  add("safe_margin_accepts", all.safe_margin * n,
      "episodes * sum_s w_s (1-q) fast_s");
  add("typed_gate_accepts", all.typed_gate * n,
      "episodes * sum_s w_s (1-q) (1 - fast_s) [claims assert compliance]");
  return r;
}

}  // namespace exaudit
