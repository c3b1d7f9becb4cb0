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

#ifndef EXAUDIT_CONFIG_H_
#define EXAUDIT_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exaudit/harness.h"

namespace exaudit {

// Flat `key = value` text, one entry per line. `#` starts a comment, blank
// lines are ignored, unknown or repeated keys are errors.
//
//   condition            artifact | silent
//   policy               truthful | silent | fixed_cheater | best_response
//   cheat_rate           [0, 1]
//   target_words         words per artifact (default 17)
//   misreport_words      words per misreporting artifact (default target)
//   confidence           declared confidence (default 0.9)
//   observation_offset   outward shift of action estimates, limit units
//   q, B                 audit intensity and budget
//   V, L                 approval reward and detection penalty
//   word_cost, audit_overhead, validator_reward, latency_cost,
//   opportunity_cost, bad_approval_penalty
//   safe_margin          fast-path headroom (default 0.25)
//   use_observable_estimates  true | false
//   p_ambiguous, p_clear_safe, p_bad   episode mix
//   clear_headroom       clear-safe headroom (defaults to safe_margin)
//   risk_limit, delta_limit, max_words
//   episodes             episodes per seed
//   seeds                comma-separated list
//   threads              worker threads, 0 = hardware concurrency
//
// The result is validated; errors are ConfigError naming the key.
RunConfig ParseConfig(std::string_view text);
RunConfig LoadConfigFile(const std::string& path);

// Sets one key on `cfg` without validating the whole config.
void ApplyConfigEntry(RunConfig& cfg, std::string_view key,
                      std::string_view value);

std::vector<double> ParseDoubleList(std::string_view text,
                                    const std::string& field);
std::vector<int> ParseIntList(std::string_view text, const std::string& field);
std::vector<std::uint64_t> ParseSeedList(std::string_view text,
                                         const std::string& field);
bool ParseBool(std::string_view text, const std::string& field);

}  // namespace exaudit

#endif  // EXAUDIT_CONFIG_H_
