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

#include "exaudit/episode_log.h"

#include <array>
#include <optional>
#include <string>

#include "exaudit/error.h"

namespace exaudit {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

template <typename T, typename Parser>
T ParseOr(const json& j, Parser parse, const char* what) {
  auto v = parse(j.get<std::string>());
  if (!v) throw UsageError(std::string("episode log: bad ") + what);
  return *v;
}

ordered_json ClaimList(const std::vector<ClaimType>& claims) {
  ordered_json a = ordered_json::array();
  for (ClaimType c : claims) a.push_back(std::string(ToString(c)));
  return a;
}

std::vector<ClaimType> ParseClaimList(const json& j) {
  std::vector<ClaimType> out;
  for (const auto& e : j) {
    out.push_back(ParseOr<ClaimType>(e, ParseClaimType, "claim type"));
  }
  return out;
}

}  // namespace

ordered_json ToJson(const EpisodeLog& log) {
  ordered_json j;
  j["seed"] = log.seed;
  j["index"] = log.index;

  const GroundTruthState& t = log.truth;
  j["truth"] = {
      {"klass", std::string(ToString(t.klass))},
      {"violation", std::string(ToString(t.violation))},
      {"intent", std::string(ToString(t.true_intent))},
      {"risk", t.true_risk},
      {"net_delta", t.true_net_delta},
      {"risk_ratio", t.risk_ratio()},
      {"delta_ratio", t.delta_ratio()},
      {"limits",
       {{"risk_limit", t.limits.risk_limit},
        {"delta_limit", t.limits.delta_limit},
        {"max_words", t.limits.max_words}}},
  };

  const Proposal& p = log.proposal;
  ordered_json claims = nullptr;
  if (p.artifact.claims) {
    const ClaimSet& c = *p.artifact.claims;
    claims = {{"intent", std::string(ToString(c.intent))},
              {"risk_within_limit", c.risk_within_limit},
              {"net_delta_bounded", c.net_delta_bounded},
              {"confidence", c.confidence}};
  }
  j["proposal"] = {
      {"observable_risk", p.action.observable_risk_estimate},
      {"observable_delta", p.action.observable_delta_estimate},
      {"claims", claims},
      {"words", p.artifact.text_word_count},
      {"k_misreported", log.k_misreported},
      {"misreported", log.misreported},
  };

  j["audit"] = {{"status", std::string(ToString(log.audit.status))},
                {"checked", ClaimList(log.audit.checked)},
                {"failed", ClaimList(log.audit.failed)}};
  j["decision"] = {{"verdict", std::string(ToString(log.decision.verdict))},
                   {"route", std::string(ToString(log.decision.route))}};

  ordered_json items;
  for (const auto& c : log.payoff.components) {
    items[std::string(ToString(c.item))] = c.amount;
  }
  j["payoff"] = {{"u_S", log.payoff.u_s},
                 {"u_R", log.payoff.u_r},
                 {"components", items}};
  j["welfare"] = log.welfare;
  return j;
}

EpisodeLog EpisodeLogFromJson(const json& j) {
  EpisodeLog log;
  log.seed = j.at("seed").get<std::uint64_t>();
  log.index = j.at("index").get<std::uint64_t>();

  const json& t = j.at("truth");
  log.truth.klass =
      ParseOr<EpisodeClass>(t.at("klass"), ParseEpisodeClass, "klass");
  log.truth.violation =
      ParseOr<Violation>(t.at("violation"), ParseViolation, "violation");
  log.truth.true_intent = ParseOr<Intent>(t.at("intent"), ParseIntent, "intent");
  log.truth.true_risk = t.at("risk").get<double>();
  log.truth.true_net_delta = t.at("net_delta").get<double>();
  const json& lim = t.at("limits");
  log.truth.limits.risk_limit = lim.at("risk_limit").get<double>();
  log.truth.limits.delta_limit = lim.at("delta_limit").get<double>();
  log.truth.limits.max_words = lim.at("max_words").get<int>();

  const json& p = j.at("proposal");
  log.proposal.action.observable_risk_estimate =
      p.at("observable_risk").get<double>();
  log.proposal.action.observable_delta_estimate =
      p.at("observable_delta").get<double>();
  if (!p.at("claims").is_null()) {
    const json& c = p.at("claims");
    ClaimSet cs;
    cs.intent = ParseOr<Intent>(c.at("intent"), ParseIntent, "claim intent");
    cs.risk_within_limit = c.at("risk_within_limit").get<bool>();
    cs.net_delta_bounded = c.at("net_delta_bounded").get<bool>();
    cs.confidence = c.at("confidence").get<double>();
    log.proposal.artifact.claims = cs;
  }
  log.proposal.artifact.text_word_count = p.at("words").get<int>();
  log.k_misreported = p.at("k_misreported").get<int>();
  log.misreported = p.at("misreported").get<bool>();

  const json& a = j.at("audit");
  log.audit.status =
      ParseOr<AuditStatus>(a.at("status"), ParseAuditStatus, "audit status");
  log.audit.checked = ParseClaimList(a.at("checked"));
  log.audit.failed = ParseClaimList(a.at("failed"));

  const json& d = j.at("decision");
  log.decision.verdict = ParseOr<DecisionVerdict>(
      d.at("verdict"), ParseDecisionVerdict, "verdict");
  log.decision.route = ParseOr<Route>(d.at("route"), ParseRoute, "route");

  const json& pay = j.at("payoff");
  log.payoff.u_s = pay.at("u_S").get<double>();
  log.payoff.u_r = pay.at("u_R").get<double>();
  // Object key order is not preserved by the parser; restore enum order.
  std::array<std::optional<double>, kNumPayoffItems> amounts;
  for (const auto& [name, amount] : pay.at("components").items()) {
    auto item = ParsePayoffItem(name);
    if (!item) throw UsageError("episode log: bad payoff item " + name);
    amounts[static_cast<int>(*item)] = amount.get<double>();
  }
  for (int i = 0; i < kNumPayoffItems; ++i) {
    if (!amounts[i]) continue;
    const auto item = static_cast<PayoffItem>(i);
    log.payoff.components.push_back({item, PartyOf(item), *amounts[i]});
  }
  log.welfare = j.at("welfare").get<double>();
  return log;
}

}  // namespace exaudit
