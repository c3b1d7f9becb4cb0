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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "exaudit/audit.h"
#include "exaudit/economics.h"
#include "exaudit/harness.h"
#include "exaudit/output.h"
#include "exaudit/policies.h"
#include "exaudit/rng.h"
#include "oracles.h"

namespace exaudit {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

std::string Fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

std::string Cell(double q, int b) {
  return "q=" + FormatNumber(q) + " B=" + std::to_string(b);
}

// Proposal/state pair whose compliance claim contradicts `k` (0..3) fields.
std::pair<Proposal, GroundTruthState> WithKWrong(int k) {
  GroundTruthState s;
  s.true_risk = 0.5;
  s.true_net_delta = 0.5;
  if (k >= 1) s.true_intent = Intent::kSpeculate;
  if (k >= 2) s.true_risk = 1.1;
  if (k >= 3) s.true_net_delta = 1.1;
  s.klass = k > 0 ? EpisodeClass::kBad : EpisodeClass::kAmbiguousGood;
  return {k == 0 ? ProposeTruthful(s) : ProposeMisreport(s), s};
}

// 1. Detection probability: subset enumeration and Monte Carlo.
Result DetectionOracle() {
  Result r;
  const auto start = Clock::now();
  const std::size_t n = 100000;
  const double q = 0.5;
  int exact = 0, mc = 0;
  for (int k = 0; k <= 4; ++k) {
    for (int b = 0; b <= 4; ++b) {
      const auto [hits, total] = testing::EnumerateDetection(k, b);
      const std::string tag = "k=" + std::to_string(k) + " " + Cell(q, b);
      for (double qq : {0.0, 0.25, q, 1.0}) {
        const double oracle = qq * (static_cast<double>(hits) / total);
        r.Check(DetectionProbability(k, {qq, b}) == oracle,
                "enumeration mismatch " + tag);
      }
      ++exact;

      // Sampling machinery against the first k claim types.
      const AuditPolicy policy{q, b};
      const double p = DetectionProbability(k, policy);
      RngStream rng(0xA0 + 5 * k + b);
      std::size_t detected = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const AuditDraw d = DrawAudit(rng, policy);
        for (ClaimType c : d.subset) {
          if (static_cast<int>(c) < k) {
            ++detected;
            break;
          }
        }
      }
      r.Check(testing::WithinCount3Sigma(detected, p, n),
              "draw frequency " + tag + " got " +
                  Fmt("%.5f", double(detected) / n) + " want " + Fmt("%.5f", p));
      // Full audit evaluation; k = 4 has no realizable claim set.
      if (k <= 3) {
        const auto [proposal, truth] = WithKWrong(k);
        RngStream arng(0xB0 + 5 * k + b);
        std::size_t fails = 0;
        for (std::size_t i = 0; i < n; ++i) {
          fails += RunAudit(proposal, truth, policy, arng).status ==
                   AuditStatus::kFail;
        }
        r.Check(testing::WithinCount3Sigma(fails, p, n),
                "audit FAIL frequency " + tag);
      }
      ++mc;
    }
  }
  const double secs = Seconds(start);
  r.Check(secs < 10.0, "runtime " + Fmt("%.2f s", secs));
  r.detail = std::to_string(exact) + " (k,B) cells exact, " +
             std::to_string(mc) + " Monte Carlo cells x 1e5 audits, " +
             Fmt("%.2f s", secs);
  return r;
}

// First grid index i (q = i/100) at which the best responder reports
// truthfully, or -1.
int SimulatedSwitch(double v, double l) {
  IncentiveParams inc;
  inc.V = v;
  inc.L = l;
  RunConfig cfg;
  cfg.policy.kind = PolicyKind::kBestResponse;
  cfg.incentives = inc;
  cfg.mix = {0.0, 0.0, 1.0, 0.25};
  cfg.episodes_per_seed = 30;
  cfg.seeds = {1};
  for (int i = 0; i <= 100; ++i) {
    cfg.audit = {i / 100.0, 4};
    const auto m = Run(cfg, false).per_seed[0].metrics;
    if (m.misreports == 0) return i;
  }
  return -1;
}

// 2. Deterrence switch points, exact on the 0.01 grid.
Result DeterrenceSwitch() {
  Result r;
  struct Case {
    int v, l, want;  // want = ceil(100 v / (v + l)), integer arithmetic
  };
  const Case cases[] = {{1, 2, 34}, {2, 1, 67}, {1, 4, 20}};
  std::string detail;
  for (const auto& c : cases) {
    r.Check(c.want == (100 * c.v + c.v + c.l - 1) / (c.v + c.l), "oracle");
    const int got = SimulatedSwitch(c.v, c.l);
    IncentiveParams inc;
    inc.V = c.v;
    inc.L = c.l;
    const auto thr = DeterrenceThreshold(inc, 4, 1);
    r.Check(got == c.want, "V=" + std::to_string(c.v) + " L=" +
                               std::to_string(c.l) + " switched at " +
                               std::to_string(got));
    r.Check(thr.has_value() &&
                std::abs(*thr - double(c.v) / (c.v + c.l)) < 1e-15,
            "threshold value");
    detail += "(V=" + std::to_string(c.v) + ",L=" + std::to_string(c.l) +
              ") q*=" + Fmt("%.4f", thr.value_or(-1)) + " switch at q=" +
              Fmt("%.2f", got / 100.0) + "; ";
  }
  r.detail = detail;
  return r;
}

const std::vector<double> kIntensities = {0.0, 0.1, 0.3, 0.5, 0.7, 1.0};

RunConfig SilentConfig(double q) {
  RunConfig cfg;
  cfg.condition = Condition::kSilent;
  cfg.policy.kind = PolicyKind::kSilent;
  cfg.audit.q = q;
  return cfg;
}

// 3. Cost of silence.
Result CostOfSilence() {
  Result r;
  std::string detail = "approval:";
  for (double q : kIntensities) {
    RunConfig cfg = SilentConfig(q);
    cfg.episodes_per_seed = 2000;  // x 5 seeds = 1e4
    const RunResult res = Run(cfg, false);
    std::size_t accepted = 0, ambig_accepted = 0, n = 0;
    double welfare = 0;
    double welfare_dev = 0;
    for (const auto& sr : res.per_seed) {
      accepted += sr.metrics.accepted;
      ambig_accepted += sr.metrics.accepted_ambiguous;
      n += sr.metrics.episodes;
      welfare += sr.metrics.mean_welfare * sr.metrics.episodes;
      welfare_dev = std::max(welfare_dev, sr.metrics.welfare_std);
    }
    const double want = cfg.mix.p_clear_safe * (1 - q);
    r.Check(ambig_accepted == 0, "ambiguous approvals at q=" + FormatNumber(q));
    r.Check(testing::WithinCount3Sigma(accepted, want, n),
            "approval at q=" + FormatNumber(q));
    if (q == 1.0) {
      r.Check(std::abs(welfare / n - (-cfg.incentives.audit_overhead)) < 1e-12 &&
                  welfare_dev < 1e-12,
              "welfare at q=1 is " + Fmt("%.6f", welfare / n));
      detail += Fmt(" %.4f", double(accepted) / n) + " | welfare(q=1) " +
                Fmt("%.4f", welfare / n);
    } else {
      detail += Fmt(" %.4f", double(accepted) / n);
    }
  }
  r.detail = detail + " over q in {0,.1,.3,.5,.7,1}, ambiguous approval 0";
  return r;
}

// 4. Coordination gain of the artifact condition.
Result CoordinationGain() {
  Result r;
  const auto start = Clock::now();
  double lo = 1e9, hi = -1e9, min_approval = 1.0;
  for (double q : kIntensities) {
    RunConfig art;
    art.audit.q = q;
    const RunResult a = Run(art, false);
    const RunResult s = Run(SilentConfig(q), false);
    for (const auto& sr : a.per_seed) {
      r.Check(sr.metrics.audit_fail_rate == 0.0 && sr.metrics.audit_fails == 0,
              "audit fail at q=" + FormatNumber(q));
    }
    const double approval = a.pooled.Mean("ambig_approval");
    min_approval = std::min(min_approval, approval);
    r.Check(approval >= 0.99, "ambiguous approval " + Fmt("%.4f", approval) +
                                  " at q=" + FormatNumber(q));
    const double gain =
        a.pooled.Mean("ambig_welfare") - s.pooled.Mean("ambig_welfare");
    lo = std::min(lo, gain);
    hi = std::max(hi, gain);
    r.Check(gain >= 1.2 && gain <= 1.8,
            "gain " + Fmt("%.4f", gain) + " at q=" + FormatNumber(q));
  }
  const double secs = Seconds(start);
  r.Check(secs < 5.0, "runtime " + Fmt("%.2f s", secs));
  r.detail = "min ambiguous approval " + Fmt("%.4f", min_approval) +
             ", welfare gain in [" + Fmt("%.4f", lo) + ", " + Fmt("%.4f", hi) +
             "], audit_fail 0, " + Fmt("%.2f s", secs);
  return r;
}

struct Rate {
  std::size_t bad_accepted = 0;
  std::size_t accepted = 0;
  double value() const {
    return accepted ? double(bad_accepted) / accepted : 0.0;
  }
  double sigma() const {
    const double p = value();
    return accepted ? std::sqrt(p * (1 - p) / accepted) : 0.0;
  }
};

Rate BadApproval(const RunConfig& cfg) {
  Rate rate;
  for (const auto& sr : Run(cfg, false).per_seed) {
    rate.bad_accepted += sr.metrics.bad_accepted;
    rate.accepted += sr.metrics.accepted;
  }
  return rate;
}

// 5. Safety monotonicity.
Result SafetyMonotonicity() {
  Result r;
  const std::vector<int> budgets = {0, 1, 2, 4};
  std::vector<std::vector<Rate>> grid;  // [B][q]
  for (int b : budgets) {
    grid.emplace_back();
    for (double q : kIntensities) {
      RunConfig cfg;
      cfg.policy.kind = PolicyKind::kFixedCheater;
      cfg.policy.cheat_rate = 1.0;
      cfg.audit = {q, b};
      cfg.episodes_per_seed = 2000;  // x 5 seeds = 1e4
      grid.back().push_back(BadApproval(cfg));
    }
  }
  auto non_increasing = [&](const Rate& a, const Rate& b, const std::string& w) {
    const double tol = 3.0 * std::hypot(a.sigma(), b.sigma());
    r.Check(b.value() <= a.value() + tol,
            w + ": " + Fmt("%.4f", a.value()) + " -> " + Fmt("%.4f", b.value()));
  };
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
    for (std::size_t qi = 0; qi < kIntensities.size(); ++qi) {
      const std::string here = Cell(kIntensities[qi], budgets[bi]);
      if (qi + 1 < kIntensities.size()) {
        non_increasing(grid[bi][qi], grid[bi][qi + 1], "in q at " + here);
      }
      // B = 0 rejects every triggered proposal, so at q = 1 nothing is
      // accepted and the ratio is 0 by convention; the budget comparison
      // covers the auditing budgets B >= 1.
      if (bi >= 1 && bi + 1 < budgets.size()) {
        non_increasing(grid[bi][qi], grid[bi + 1][qi], "in B at " + here);
      }
    }
  }

  // Deterred best responders never get a BAD action approved.
  struct Deterred {
    double v, l;
    std::vector<double> qs;
  };
  const Deterred deterred[] = {{1, 2, {1.0 / 3.0, 0.34, 0.5, 0.7, 1.0}},
                               {2, 1, {0.67, 0.7, 1.0}},
                               {1, 4, {0.2, 0.3, 0.5, 1.0}}};
  std::size_t bad_episodes = 0, bad_accepted = 0;
  for (const auto& d : deterred) {
    for (double q : d.qs) {
      RunConfig cfg;
      cfg.policy.kind = PolicyKind::kBestResponse;
      cfg.incentives.V = d.v;
      cfg.incentives.L = d.l;
      cfg.audit = {q, 4};
      cfg.episodes_per_seed = 2000;
      for (const auto& sr : Run(cfg, false).per_seed) {
        bad_episodes += sr.metrics.bad_episodes;
        bad_accepted += sr.metrics.bad_accepted;
        r.Check(sr.metrics.misreports == 0 && sr.metrics.bad_accepted == 0 &&
                    sr.metrics.bad_approval_rate == 0.0,
                "best response V=" + FormatNumber(d.v) + " L=" +
                    FormatNumber(d.l) + " q=" + FormatNumber(q));
      }
    }
  }
  r.detail = "FIXED_CHEATER bad_approval q=0..1 at B=4: " +
             Fmt("%.4f", grid[3].front().value()) + " -> " +
             Fmt("%.4f", grid[3].back().value()) + ", at q=0.3 B=0..4: " +
             Fmt("%.4f", grid[0][2].value()) + " -> " +
             Fmt("%.4f", grid[3][2].value()) + "; deterred best responders: " +
             std::to_string(bad_accepted) + " of " +
             std::to_string(bad_episodes) + " BAD approved";
  return r;
}

// 6. Best responses on the budget/incentive grid match the thresholds.
Result BudgetEfficiency() {
  Result r;
  const double q = 0.3;
  std::string detail;
  for (auto [v, l] : {std::pair{1.0, 2.0}, std::pair{2.0, 1.0},
                      std::pair{1.0, 4.0}}) {
    for (int b : {1, 2, 4}) {
      RunConfig cfg;
      cfg.policy.kind = PolicyKind::kBestResponse;
      cfg.incentives.V = v;
      cfg.incentives.L = l;
      cfg.audit = {q, b};
      // Generated BAD states carry exactly one contradicted claim.
      const auto thr = DeterrenceThreshold(cfg.incentives, b, 1);
      const bool analytic_misreports = !thr || q < *thr;
      std::size_t bad = 0, mis = 0;
      for (const auto& sr : Run(cfg, false).per_seed) {
        bad += sr.metrics.bad_episodes;
        mis += sr.metrics.misreports;
      }
      const bool all = mis == bad, none = mis == 0;
      const std::string tag = "V=" + FormatNumber(v) + " L=" + FormatNumber(l) +
                              " B=" + std::to_string(b);
      r.Check(analytic_misreports ? all : none,
              tag + " simulated " + std::to_string(mis) + "/" +
                  std::to_string(bad) + " misreports");
      // Claim-level check for multi-claim violations.
      for (int k = 1; k <= 3; ++k) {
        const auto tk = DeterrenceThreshold(cfg.incentives, b, k);
        const bool expect = !tk || q < *tk;
        r.Check(BestResponseMisreports(WithKWrong(k).second, cfg.incentives,
                                       cfg.audit) == expect,
                tag + " k=" + std::to_string(k));
      }
      detail += tag + ": q*=" + (thr ? Fmt("%.3f", *thr) : "NONE") + " " +
                (analytic_misreports ? "misreport" : "deterred") + "; ";
    }
  }
  r.detail = detail;
  return r;
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Writes both output files for a sweep into `dir`.
void WriteSweep(const RunConfig& base, const SweepGrid& grid,
                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto cells = Sweep(base, grid, true);
  std::ofstream csv(dir / "metrics.csv", std::ios::binary);
  WriteMetricsCsv(csv, cells);
  std::ofstream jsonl(dir / "episodes.jsonl", std::ios::binary);
  WriteEpisodesJsonl(jsonl, cells);
}

// 7. Determinism across runs and thread counts.
Result Determinism() {
  Result r;
  const auto root =
      std::filesystem::temp_directory_path() / "exaudit_acceptance_determinism";
  std::filesystem::remove_all(root);
  RunConfig base;
  base.policy.kind = PolicyKind::kFixedCheater;
  base.policy.cheat_rate = 0.5;
  SweepGrid grid;
  grid.q = {0.0, 0.3, 1.0};
  grid.budgets = {1, 4};
  base.threads = 1;
  WriteSweep(base, grid, root / "a");
  WriteSweep(base, grid, root / "b");
  base.threads = 4;
  WriteSweep(base, grid, root / "c");
  std::size_t bytes = 0;
  for (const char* f : {"metrics.csv", "episodes.jsonl"}) {
    const std::string a = ReadFile(root / "a" / f);
    bytes += a.size();
    r.Check(!a.empty(), std::string(f) + " empty");
    r.Check(a == ReadFile(root / "b" / f), std::string(f) + " differs across runs");
    r.Check(a == ReadFile(root / "c" / f),
            std::string(f) + " differs between 1 and 4 threads");
  }
  std::filesystem::remove_all(root);
  r.detail = "6 cells, " + std::to_string(bytes) +
             " bytes identical across two sequential runs and a 4-thread run";
  return r;
}

// 8. Welfare identity and itemized payoff rules.
Result WelfareIdentity() {
  Result r;
  RngStream rng(2024);
  const PolicyKind kinds[] = {PolicyKind::kTruthful, PolicyKind::kSilent,
                              PolicyKind::kFixedCheater,
                              PolicyKind::kBestResponse};
  double worst = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    RunConfig cfg;
    cfg.policy.kind = kinds[rng.Below(4)];
    cfg.condition = cfg.policy.kind == PolicyKind::kSilent ? Condition::kSilent
                                                           : Condition::kArtifact;
    cfg.policy.cheat_rate = rng.Uniform();
    cfg.policy.target_words = static_cast<int>(rng.Below(61));
    cfg.audit = {rng.Uniform(), static_cast<int>(rng.Below(5))};
    IncentiveParams& p = cfg.incentives;
    p.V = 0.1 + 4 * rng.Uniform();
    p.L = 0.1 + 4 * rng.Uniform();
    p.word_cost = 0.05 * rng.Uniform();
    p.audit_overhead = 0.5 * rng.Uniform();
    p.validator_approval_reward = 2 * rng.Uniform();
    p.latency_cost = 0.1 * rng.Uniform();
    p.opportunity_cost = 0.1 * rng.Uniform();
    p.bad_approval_penalty = rng.Uniform();
    const EpisodeLog log = RunEpisode(cfg, 7, i);
    const PayoffBreakdown& b = log.payoff;

    const double identity_err = std::abs(log.welfare - (b.u_s + b.u_r));
    worst = std::max(worst, identity_err);
    r.Check(identity_err == 0.0, "welfare != u_S + u_R");
    double us = 0, ur = 0;
    for (const auto& c : b.components) {
      (c.party == Party::kProposer ? us : ur) += c.amount;
    }
    r.Check(us == b.u_s && ur == b.u_r, "party sums");

    const bool acc = log.decision.accepted();
    const double words = log.proposal.artifact.text_word_count;
    r.Check(b.amount(PayoffItem::kApprovalReward) == (acc ? p.V : 0.0),
            "approval reward");
    r.Check(b.amount(PayoffItem::kDetectionPenalty) ==
                (log.audit.status == AuditStatus::kFail ? -p.L : 0.0),
            "detection penalty");
    r.Check(std::abs(b.amount(PayoffItem::kReasoningCost) +
                     (p.word_cost * words + p.latency_cost +
                      p.opportunity_cost)) <= 1e-15,
            "word cost");
    r.Check(b.amount(PayoffItem::kValidatorReward) ==
                (acc ? p.validator_approval_reward : 0.0),
            "validator reward");
    r.Check(b.amount(PayoffItem::kAuditOverhead) ==
                (log.audit.triggered() ? -p.audit_overhead : 0.0),
            "audit overhead");
    r.Check(b.amount(PayoffItem::kBadApprovalPenalty) ==
                (acc && !IsCompliant(log.truth) ? -p.bad_approval_penalty : 0.0),
            "bad approval penalty");
  }
  r.detail = std::to_string(n) +
             " random episodes, max |welfare - (u_S + u_R)| = " +
             Fmt("%.3g", worst) + ", all components match their rules";
  return r;
}

}  // namespace
}  // namespace exaudit

int main() {
  using namespace exaudit;
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"detection oracle", DetectionOracle},
      {"deterrence switch", DeterrenceSwitch},
      {"cost of silence", CostOfSilence},
      {"coordination gain", CoordinationGain},
      {"safety monotonicity", SafetyMonotonicity},
      {"budget efficiency", BudgetEfficiency},
      {"determinism", Determinism},
      {"welfare identity", WelfareIdentity},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s: %s\n", r.pass ? "PASS" : "FAIL", index, name,
                r.detail.c_str());
    for (const auto& f : r.failures) std::printf("       - %s\n", f.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
