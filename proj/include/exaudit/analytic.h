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

#ifndef EXAUDIT_ANALYTIC_H_
#define EXAUDIT_ANALYTIC_H_

#include <string>
#include <vector>

#include "exaudit/harness.h"

namespace exaudit {

struct Prediction {
  std::string name;  // matches the Flatten() metric names where one exists
  double value = 0.0;
  std::string formula;
};

// Exact expectations of the per-episode metrics under the configured mix
// for a scripted proposer. Ratio metrics (bad_approval, audit_fail) are
// ratios of expectations.
struct AnalyticReport {
  std::vector<Prediction> predictions;

  // Throws UsageError for an unknown name.
  const Prediction& Get(const std::string& name) const;
  double Value(const std::string& name) const { return Get(name).value; }
};

AnalyticReport Analyze(const RunConfig& cfg);

}  // namespace exaudit

#endif  // EXAUDIT_ANALYTIC_H_
