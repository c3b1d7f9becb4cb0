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

#include "exaudit/config.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "exaudit/error.h"

namespace exaudit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseNumber(std::string_view text, const std::string& field) {
  text = Trim(text);
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(field, "cannot parse '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> ParseList(std::string_view text, const std::string& field) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto stop = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(ParseNumber<T>(text.substr(start, stop - start), field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<double> ParseDoubleList(std::string_view text,
                                    const std::string& field) {
  return ParseList<double>(text, field);
}

std::vector<int> ParseIntList(std::string_view text, const std::string& field) {
  return ParseList<int>(text, field);
}

std::vector<std::uint64_t> ParseSeedList(std::string_view text,
                                         const std::string& field) {
  return ParseList<std::uint64_t>(text, field);
}

bool ParseBool(std::string_view text, const std::string& field) {
  text = Trim(text);
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(field, "expected true or false");
}

void ApplyConfigEntry(RunConfig& cfg, std::string_view key_view,
                      std::string_view value) {
  const std::string key(key_view);
  value = Trim(value);
  auto num = [&] { return ParseNumber<double>(value, key); };
  auto integer = [&] { return ParseNumber<int>(value, key); };

  if (key == "condition") {
    auto c = ParseCondition(value);
    if (!c) throw ConfigError(key, "expected artifact or silent");
    cfg.condition = *c;
  } else if (key == "policy") {
    auto p = ParsePolicyKind(value);
    if (!p) {
      throw ConfigError(
          key, "expected truthful, silent, fixed_cheater or best_response");
    }
    cfg.policy.kind = *p;
  } else if (key == "cheat_rate") {
    cfg.policy.cheat_rate = num();
  } else if (key == "target_words") {
    cfg.policy.target_words = integer();
  } else if (key == "misreport_words") {
    cfg.policy.misreport_words = integer();
  } else if (key == "confidence") {
    cfg.policy.confidence = num();
  } else if (key == "observation_offset") {
    cfg.policy.observation_offset = num();
  } else if (key == "q") {
    cfg.audit.q = num();
  } else if (key == "B") {
    cfg.audit.budget = integer();
  } else if (key == "V") {
    cfg.incentives.V = num();
  } else if (key == "L") {
    cfg.incentives.L = num();
  } else if (key == "word_cost") {
    cfg.incentives.word_cost = num();
  } else if (key == "audit_overhead") {
    cfg.incentives.audit_overhead = num();
  } else if (key == "validator_reward") {
    cfg.incentives.validator_approval_reward = num();
  } else if (key == "latency_cost") {
    cfg.incentives.latency_cost = num();
  } else if (key == "opportunity_cost") {
    cfg.incentives.opportunity_cost = num();
  } else if (key == "bad_approval_penalty") {
    cfg.incentives.bad_approval_penalty = num();
  } else if (key == "safe_margin") {
    cfg.gating.safe_margin = num();
  } else if (key == "use_observable_estimates") {
    cfg.gating.use_observable_estimates = ParseBool(value, key);
  } else if (key == "p_ambiguous") {
    cfg.mix.p_ambiguous = num();
  } else if (key == "p_clear_safe") {
    cfg.mix.p_clear_safe = num();
  } else if (key == "p_bad") {
    cfg.mix.p_bad = num();
  } else if (key == "clear_headroom") {
    cfg.mix.clear_headroom = num();
  } else if (key == "risk_limit") {
    cfg.limits.risk_limit = num();
  } else if (key == "delta_limit") {
    cfg.limits.delta_limit = num();
  } else if (key == "max_words") {
    cfg.limits.max_words = integer();
  } else if (key == "episodes") {
    const int n = integer();
    if (n < 1) throw ConfigError(key, "must be at least 1");
    cfg.episodes_per_seed = static_cast<std::size_t>(n);
  } else if (key == "seeds") {
    cfg.seeds = ParseSeedList(value, key);
  } else if (key == "threads") {
    cfg.threads = integer();
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

RunConfig ParseConfig(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected key = value");
    }
    const std::string key(Trim(view.substr(0, eq)));
    if (!seen.insert(key).second) {
      throw ConfigError(key, "repeated key");
    }
    ApplyConfigEntry(cfg, key, view.substr(eq + 1));
  }
  if (seen.count("safe_margin") && !seen.count("clear_headroom")) {
    cfg.mix.clear_headroom = cfg.gating.safe_margin;
  }
  if (seen.count("condition") && !seen.count("policy") &&
      cfg.condition == Condition::kSilent) {
    cfg.policy.kind = PolicyKind::kSilent;
  }
  cfg.Validate();
  return cfg;
}

RunConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace exaudit
