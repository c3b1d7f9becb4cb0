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

#ifndef EXAUDIT_OUTPUT_H_
#define EXAUDIT_OUTPUT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "exaudit/analytic.h"
#include "exaudit/episode_log.h"
#include "exaudit/harness.h"

namespace exaudit {

inline constexpr const char* kMetricsCsvHeader =
    "condition,policy,q,B,V,L,seed,episodes,ambig_approval,bad_approval,"
    "audit_fail,mean_welfare,welfare_std,mean_words,safe_margin_accepts,"
    "typed_gate_accepts";

// Shortest decimal that round-trips to the same double.
std::string FormatNumber(double x);

// One row per cell per seed, then a "mean" and a "std" row per cell.
void WriteMetricsCsv(std::ostream& out, std::span<const SweepCell> cells);

// One JSON object per episode, prefixed with its cell coordinates.
void WriteEpisodesJsonl(std::ostream& out, std::span<const SweepCell> cells);

struct LoggedEpisode {
  std::string cell;  // "condition,policy,q,B,V,L" as in metrics.csv
  EpisodeLog log;
};

std::vector<LoggedEpisode> ReadEpisodesJsonl(std::istream& in);

// Cell coordinates exactly as they appear in the first six CSV columns.
std::string CellLabel(const RunConfig& cfg);

inline constexpr const char* kAnalyticCsvHeader =
    "condition,policy,q,B,V,L,metric,predicted,formula";

// Rows (no header) for one configuration's predictions.
void WriteAnalyticRows(std::ostream& out, const RunConfig& cfg,
                       const AnalyticReport& report);

}  // namespace exaudit

#endif  // EXAUDIT_OUTPUT_H_
