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

#include "exaudit/output.h"

#include <charconv>
#include <istream>
#include <ostream>

#include "exaudit/error.h"

namespace exaudit {

std::string FormatNumber(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string CellLabel(const RunConfig& cfg) {
  std::string s;
  s += ToString(cfg.condition);
  s += ',';
  s += ToString(cfg.policy.kind);
  s += ',' + FormatNumber(cfg.audit.q);
  s += ',' + std::to_string(cfg.audit.budget);
  s += ',' + FormatNumber(cfg.incentives.V);
  s += ',' + FormatNumber(cfg.incentives.L);
  return s;
}

namespace {

void WriteRow(std::ostream& out, const std::string& label,
              const std::string& seed, std::size_t episodes,
              const std::vector<double>& values) {
  out << label << ',' << seed << ',' << episodes;
  // The first eight flattened metrics are the CSV metric columns.
  for (std::size_t i = 0; i < 8; ++i) out << ',' << FormatNumber(values[i]);
  out << '\n';
}

}  // namespace

void WriteMetricsCsv(std::ostream& out, std::span<const SweepCell> cells) {
  out << kMetricsCsvHeader << '\n';
  for (const auto& cell : cells) {
    const std::string label = CellLabel(cell.config);
    const std::size_t n = cell.config.episodes_per_seed;
    for (const auto& sr : cell.result.per_seed) {
      std::vector<double> values;
      for (const auto& [name, v] : Flatten(sr.metrics)) values.push_back(v);
      WriteRow(out, label, std::to_string(sr.seed), n, values);
    }
    WriteRow(out, label, "mean", n, cell.result.pooled.mean);
    WriteRow(out, label, "std", n, cell.result.pooled.stddev);
  }
}

void WriteEpisodesJsonl(std::ostream& out, std::span<const SweepCell> cells) {
  for (const auto& cell : cells) {
    const RunConfig& c = cell.config;
    for (const auto& sr : cell.result.per_seed) {
      for (const auto& log : sr.logs) {
        nlohmann::ordered_json j;
        j["condition"] = std::string(ToString(c.condition));
        j["policy"] = std::string(ToString(c.policy.kind));
        j["q"] = c.audit.q;
        j["B"] = c.audit.budget;
        j["V"] = c.incentives.V;
        j["L"] = c.incentives.L;
        j.update(ToJson(log));
        out << j.dump() << '\n';
      }
    }
  }
}

std::vector<LoggedEpisode> ReadEpisodesJsonl(std::istream& in) {
  std::vector<LoggedEpisode> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    LoggedEpisode e;
    e.cell = j.at("condition").get<std::string>() + ',' +
             j.at("policy").get<std::string>() + ',' +
             FormatNumber(j.at("q").get<double>()) + ',' +
             std::to_string(j.at("B").get<int>()) + ',' +
             FormatNumber(j.at("V").get<double>()) + ',' +
             FormatNumber(j.at("L").get<double>());
    e.log = EpisodeLogFromJson(j);
    out.push_back(std::move(e));
  }
  return out;
}

void WriteAnalyticRows(std::ostream& out, const RunConfig& cfg,
                       const AnalyticReport& report) {
  const std::string label = CellLabel(cfg);
  for (const auto& p : report.predictions) {
    out << label << ',' << p.name << ',' << FormatNumber(p.value) << ",\""
        << p.formula << "\"\n";
  }
}

}  // namespace exaudit
