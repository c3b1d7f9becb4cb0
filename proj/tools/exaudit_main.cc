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

// Command-line front end: run one configuration, sweep a grid, or print the
// closed-form predictions for a configuration.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "exaudit/analytic.h"
#include "exaudit/config.h"
#include "exaudit/error.h"
#include "exaudit/harness.h"
#include "exaudit/output.h"

namespace {

using namespace exaudit;

struct Options {
  std::string config_path;
  std::string q;
  std::string budget;
  std::string v;
  std::string l;
  std::string incentives;  // V:L pairs
  std::string condition;
  std::string policy;
  std::optional<double> cheat_rate;
  std::optional<int> episodes;
  std::string seeds;
  std::optional<int> threads;
  std::string out_dir = "out";
  bool log_episodes = true;
  std::string preset;
};

void AddCommonFlags(CLI::App* cmd, Options& o, bool lists) {
  cmd->add_option("--config", o.config_path, "flat key = value config file");
  cmd->add_option("--q", o.q, lists ? "audit intensities, comma-separated"
                                    : "audit intensity");
  cmd->add_option("--budget", o.budget,
                  lists ? "audit budgets, comma-separated" : "audit budget");
  cmd->add_option("--V", o.v, "approval reward");
  cmd->add_option("--L", o.l, "detection penalty");
  cmd->add_option("--condition", o.condition,
                  lists ? "artifact, silent, or both comma-separated"
                        : "artifact or silent");
  cmd->add_option("--policy", o.policy,
                  "truthful, silent, fixed_cheater or best_response");
  cmd->add_option("--cheat-rate", o.cheat_rate, "FIXED_CHEATER misreport rate");
  cmd->add_option("--episodes", o.episodes, "episodes per seed");
  cmd->add_option("--seeds", o.seeds, "comma-separated seeds");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  if (lists) {
    cmd->add_option("--incentives", o.incentives,
                    "explicit V:L pairs, e.g. 1:2,2:1,1:4");
    cmd->add_option("--preset", o.preset,
                    "audit-intensity | incentives | budget");
  }
}

std::vector<std::string> SplitComma(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Base configuration: file (if any), then scalar flag overrides.
RunConfig BaseConfig(const Options& o, bool lists) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{}
                                        : LoadConfigFile(o.config_path);
  auto single = [&](const std::string& text, const char* key) {
    if (text.empty()) return;
    if (!lists) {
      if (text.find(',') != std::string::npos) {
        throw ConfigError(key, "takes one value here; use `sweep` for lists");
      }
      ApplyConfigEntry(cfg, key, text);
    }
  };
  single(o.q, "q");
  single(o.budget, "B");
  single(o.v, "V");
  single(o.l, "L");
  if (!o.condition.empty() && (!lists || o.condition.find(',') == std::string::npos)) {
    ApplyConfigEntry(cfg, "condition", o.condition);
    if (o.policy.empty()) {
      cfg.policy.kind = EffectivePolicy(cfg.condition, cfg.policy.kind);
    }
  }
  if (!o.policy.empty()) ApplyConfigEntry(cfg, "policy", o.policy);
  if (o.cheat_rate) cfg.policy.cheat_rate = *o.cheat_rate;
  if (o.episodes) {
    if (*o.episodes < 1) throw ConfigError("episodes", "must be at least 1");
    cfg.episodes_per_seed = static_cast<std::size_t>(*o.episodes);
  }
  if (!o.seeds.empty()) cfg.seeds = ParseSeedList(o.seeds, "seeds");
  if (o.threads) cfg.threads = *o.threads;
  return cfg;
}

SweepGrid GridFrom(const Options& o) {
  SweepGrid g;
  if (o.preset == "audit-intensity") {
    g = AuditIntensityGrid();
  } else if (o.preset == "incentives") {
    g = IncentiveGrid();
  } else if (o.preset == "budget") {
    g = BudgetGrid();
  } else if (!o.preset.empty()) {
    throw ConfigError("preset", "expected audit-intensity, incentives or budget");
  }
  if (!o.q.empty()) g.q = ParseDoubleList(o.q, "q");
  if (!o.budget.empty()) g.budgets = ParseIntList(o.budget, "B");
  if (!o.incentives.empty()) {
    g.incentives.clear();
    for (const auto& pair : SplitComma(o.incentives)) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos) {
        throw ConfigError("incentives", "expected V:L pairs");
      }
      const auto v = ParseDoubleList(pair.substr(0, colon), "incentives");
      const auto l = ParseDoubleList(pair.substr(colon + 1), "incentives");
      g.incentives.emplace_back(v.at(0), l.at(0));
    }
  } else if (!o.v.empty() || !o.l.empty()) {
    const auto vs = o.v.empty() ? std::vector<double>{RunConfig{}.incentives.V}
                                : ParseDoubleList(o.v, "V");
    const auto ls = o.l.empty() ? std::vector<double>{RunConfig{}.incentives.L}
                                : ParseDoubleList(o.l, "L");
    g.incentives.clear();
    for (double v : vs) {
      for (double l : ls) g.incentives.emplace_back(v, l);
    }
  }
  if (!o.condition.empty()) {
    g.conditions.clear();
    for (const auto& c : SplitComma(o.condition)) {
      auto parsed = ParseCondition(c);
      if (!parsed) throw ConfigError("condition", "expected artifact or silent");
      g.conditions.push_back(*parsed);
    }
  }
  return g;
}

void WriteOutputs(const Options& o, std::span<const SweepCell> cells) {
  std::filesystem::create_directories(o.out_dir);
  const auto dir = std::filesystem::path(o.out_dir);
  std::ofstream csv(dir / "metrics.csv", std::ios::binary);
  WriteMetricsCsv(csv, cells);
  if (o.log_episodes) {
    std::ofstream jsonl(dir / "episodes.jsonl", std::ios::binary);
    WriteEpisodesJsonl(jsonl, cells);
  }
}

void PrintPooled(const SweepCell& cell) {
  const PooledMetrics& p = cell.result.pooled;
  std::printf("%-40s ambig_approval %.3f±%.3f  bad_approval %.4f  "
              "audit_fail %.3f  welfare %.3f±%.3f  ambig_welfare %.3f\n",
              CellLabel(cell.config).c_str(), p.Mean("ambig_approval"),
              p.Std("ambig_approval"), p.Mean("bad_approval"),
              p.Mean("audit_fail"), p.Mean("mean_welfare"),
              p.Std("mean_welfare"), p.Mean("ambig_welfare"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exchange-audit mechanism simulator"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "simulate one configuration");
  AddCommonFlags(run, o, false);
  run->add_option("--out", o.out_dir, "output directory");
  run->add_option("--log-episodes", o.log_episodes, "write episodes.jsonl");

  auto* sweep = app.add_subcommand("sweep", "simulate a parameter grid");
  AddCommonFlags(sweep, o, true);
  sweep->add_option("--out", o.out_dir, "output directory");
  sweep->add_option("--log-episodes", o.log_episodes, "write episodes.jsonl");

  auto* analytic =
      app.add_subcommand("analytic", "closed-form predictions for a grid");
  AddCommonFlags(analytic, o, true);
  std::string analytic_out;
  analytic->add_option("--out", analytic_out, "write analytic.csv here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      RunConfig cfg = BaseConfig(o, false);
      cfg.Validate();
      std::vector<SweepCell> cells(1);
      cells[0].config = cfg;
      cells[0].result = Run(cfg, o.log_episodes);
      WriteOutputs(o, cells);
      PrintPooled(cells[0]);
    } else if (sweep->parsed()) {
      RunConfig base = BaseConfig(o, true);
      const SweepGrid grid = GridFrom(o);
      auto cells = Sweep(base, grid, o.log_episodes);
      WriteOutputs(o, cells);
      for (const auto& c : cells) PrintPooled(c);
    } else if (analytic->parsed()) {
      RunConfig base = BaseConfig(o, true);
      SweepGrid grid = GridFrom(o);
      std::vector<RunConfig> cfgs =
          grid.empty() ? std::vector<RunConfig>{base} : ExpandGrid(base, grid);
      std::ofstream csv;
      if (!analytic_out.empty()) {
        std::filesystem::create_directories(analytic_out);
        csv.open(std::filesystem::path(analytic_out) / "analytic.csv",
                 std::ios::binary);
        csv << kAnalyticCsvHeader << '\n';
      }
      for (const auto& cfg : cfgs) {
        const AnalyticReport report = Analyze(cfg);
        std::printf("[%s]\n", CellLabel(cfg).c_str());
        for (const auto& p : report.predictions) {
          std::printf("  %-20s %12.6f   %s\n", p.name.c_str(), p.value,
                      p.formula.c_str());
        }
        if (csv.is_open()) WriteAnalyticRows(csv, cfg, report);
      }
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
