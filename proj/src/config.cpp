// Copyright 2026 The NetCollab Authors
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

#include "netcollab/config.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "netcollab/error.hpp"
#include "netcollab/io.hpp"
#include "netcollab/scenario.hpp"

namespace netcollab {

using nlohmann::json;

namespace {

const std::map<std::string, std::set<std::string>>& ScalarSections() {
  static const std::map<std::string, std::set<std::string>> sections = {
      {"router", {"w_load", "w_accuracy", "w_latency", "latency_ref_ms", "w_cost"}},
      {"rewards", {"lambda_acc", "lambda_fmt", "lambda_eff", "lambda_qos", "lambda_exp"}},
      {"trainer",
       {"group_size", "learning_rate", "iterations", "max_steps", "tau_high", "tau_low",
        "entropy_bonus", "branch_factor", "checkpoint_every", "adapt_routing", "adapt_step"}},
      {"sft", {"steps", "learning_rate", "demos"}},
      {"registry", {"ewma_alpha"}},
      {"eval", {"episodes"}},
      {"case_study", {"p_direct", "p_network_analysis", "p_protocol_query"}},
  };
  return sections;
}

const std::set<std::string>& TopLevelScalars() {
  static const std::set<std::string> keys = {"seed", "profile", "out"};
  return keys;
}

void CheckKeys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) Fail(ErrorCode::kBadConfig, where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) Fail(ErrorCode::kBadConfig, "unknown key '" + key + "' in " + where);
  }
}

std::string Where(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

double GetDouble(const json& obj, const std::string& section, const std::string& key,
                 double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) Fail(ErrorCode::kBadConfig, Where(section, key) + " must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) Fail(ErrorCode::kBadConfig, Where(section, key) + " must be finite");
  return v;
}

std::uint64_t GetUnsigned(const json& obj, const std::string& section, const std::string& key,
                          std::uint64_t fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_unsigned()) {
    Fail(ErrorCode::kBadConfig, Where(section, key) + " must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

bool GetBool(const json& obj, const std::string& section, const std::string& key, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) Fail(ErrorCode::kBadConfig, Where(section, key) + " must be true or false");
  return it->get<bool>();
}

std::string GetString(const json& obj, const std::string& section, const std::string& key,
                      const std::string& fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) Fail(ErrorCode::kBadConfig, Where(section, key) + " must be a string");
  return it->get<std::string>();
}

std::vector<std::string> GetStrings(const json& obj, const std::string& section,
                                    const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(ErrorCode::kBadConfig, Where(section, key) + " is required");
  if (!it->is_array()) Fail(ErrorCode::kBadConfig, Where(section, key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) Fail(ErrorCode::kBadConfig, Where(section, key) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

json ParseOverrideValue(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) return json(text);
  return v;
}

void ApplyOverride(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    Fail(ErrorCode::kBadConfig, "override '" + assignment + "' must look like key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const json value = ParseOverrideValue(assignment.substr(eq + 1));

  std::string section;
  std::string leaf;
  if (const auto dot = key.find('.'); dot != std::string::npos) {
    section = key.substr(0, dot);
    leaf = key.substr(dot + 1);
    auto it = ScalarSections().find(section);
    if (it == ScalarSections().end() || !it->second.count(leaf)) {
      Fail(ErrorCode::kBadConfig, "override key '" + key + "' is not a scalar setting");
    }
  } else if (TopLevelScalars().count(key)) {
    leaf = key;
  } else {
    std::vector<std::string> hits;
    for (const auto& [name, keys] : ScalarSections()) {
      if (keys.count(key)) hits.push_back(name);
    }
    if (hits.empty()) Fail(ErrorCode::kBadConfig, "override key '" + key + "' is unknown");
    if (hits.size() > 1) {
      std::string list;
      for (const auto& h : hits) list += (list.empty() ? "" : ", ") + h + "." + key;
      Fail(ErrorCode::kBadConfig, "override key '" + key + "' is ambiguous (" + list + ")");
    }
    section = hits.front();
    leaf = key;
  }
  if (section.empty()) {
    doc[leaf] = value;
    return;
  }
  json& sec = doc[section];
  if (sec.is_null()) sec = json::object();
  if (!sec.is_object()) Fail(ErrorCode::kBadConfig, section + " must be a JSON object");
  sec[leaf] = value;
}

GeneratorConfig ParseClasses(const json& tasks) {
  auto it = tasks.find("classes");
  if (it == tasks.end() || !it->is_array()) {
    Fail(ErrorCode::kBadConfig, "tasks.classes must be an array");
  }
  GeneratorConfig gen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& c = (*it)[i];
    const std::string where = "tasks.classes[" + std::to_string(i) + "]";
    CheckKeys(c,
              {"name", "probability", "required_action", "ground_truth", "payload", "difficulty",
               "sla_deadline_ms"},
              where);
    TaskClass tc;
    tc.name = GetString(c, where, "name", "");
    tc.probability = GetDouble(c, where, "probability", 0.0);
    if (auto r = c.find("required_action"); r != c.end() && !r->is_null()) {
      if (!r->is_string()) Fail(ErrorCode::kBadConfig, where + ".required_action must be a string");
      tc.required_action = r->get<std::string>();
    }
    tc.ground_truth = GetString(c, where, "ground_truth", "");
    tc.payload = GetString(c, where, "payload", tc.payload);
    tc.difficulty = static_cast<int>(GetUnsigned(c, where, "difficulty", 0));
    tc.sla_deadline_ms = GetDouble(c, where, "sla_deadline_ms", tc.sla_deadline_ms);
    gen.classes.push_back(std::move(tc));
  }
  return gen;
}

std::vector<SimAgent> ParseAgents(const json& agents, const std::vector<DiscoveredAgent>& cards) {
  if (!agents.is_array()) Fail(ErrorCode::kBadConfig, "agents must be an array");
  std::vector<SimAgent> out;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const json& a = agents[i];
    const std::string where = "agents[" + std::to_string(i) + "]";
    CheckKeys(a,
              {"card_id", "success_prob", "latency_base_ms", "latency_jitter_ms", "load_per_call",
               "initial_load"},
              where);
    const std::string id = GetString(a, where, "card_id", "");
    const DiscoveredAgent* card = nullptr;
    for (const auto& c : cards) {
      if (c.card.card_id == id) card = &c;
    }
    if (card == nullptr) Fail(ErrorCode::kBadConfig, where + ": no agent card with id '" + id + "'");
    SimAgent sim;
    sim.card = card->card;
    auto probs = a.find("success_prob");
    if (probs == a.end() || !probs->is_object()) {
      Fail(ErrorCode::kBadConfig, where + ".success_prob must be an object");
    }
    for (const auto& [action, p] : probs->items()) {
      if (!p.is_number()) Fail(ErrorCode::kBadConfig, where + ".success_prob values must be numbers");
      sim.success_prob[action] = p.get<double>();
    }
    sim.latency_base_ms = GetDouble(a, where, "latency_base_ms", sim.latency_base_ms);
    sim.latency_jitter_ms = GetDouble(a, where, "latency_jitter_ms", sim.latency_jitter_ms);
    sim.load_per_call = GetDouble(a, where, "load_per_call", sim.load_per_call);
    sim.initial_load = GetDouble(a, where, "initial_load", card->metrics.load);
    out.push_back(std::move(sim));
  }
  return out;
}

ScenarioConfig ParseScenario(const json& doc, const std::string& profile,
                             const std::string& base_dir) {
  ScenarioConfig sc;
  if (profile == "case-study") {
    json cs = doc.value("case_study", json::object());
    CheckKeys(cs, ScalarSections().at("case_study"), "case_study");
    sc = PresetCaseStudy(GetDouble(cs, "case_study", "p_direct", 0.2),
                         GetDouble(cs, "case_study", "p_network_analysis", 0.4),
                         GetDouble(cs, "case_study", "p_protocol_query", 0.4));
  } else if (profile.empty()) {
    if (doc.contains("case_study")) {
      Fail(ErrorCode::kBadConfig, "case_study settings need profile \"case-study\"");
    }
    for (const char* key : {"tasks", "agent_cards", "agents"}) {
      if (!doc.contains(key)) {
        Fail(ErrorCode::kBadConfig,
             std::string("'") + key + "' is required when no profile is selected");
      }
    }
  } else {
    Fail(ErrorCode::kBadConfig, "unknown profile '" + profile + "'");
  }

  if (auto t = doc.find("tasks"); t != doc.end()) {
    CheckKeys(*t, {"classes", "direct_answers", "integrate_token", "action_types"}, "tasks");
    sc.generator = ParseClasses(*t);
    sc.direct_answers = GetStrings(*t, "tasks", "direct_answers");
    sc.action_types = GetStrings(*t, "tasks", "action_types");
    sc.integrate_token.reset();
    if (auto it = t->find("integrate_token"); it != t->end() && !it->is_null()) {
      if (!it->is_string()) Fail(ErrorCode::kBadConfig, "tasks.integrate_token must be a string");
      sc.integrate_token = it->get<std::string>();
    }
  }
  if (auto c = doc.find("agent_cards"); c != doc.end()) {
    if (c->is_string()) {
      std::filesystem::path p(c->get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      try {
        sc.cards = AgentCardsFromJson(ReadFile(p.string()));
      } catch (const Error& e) {
        Fail(ErrorCode::kBadConfig, std::string("agent_cards: ") + e.what());
      }
    } else if (c->is_array()) {
      sc.cards = AgentCardsFromJson(c->dump());
    } else {
      Fail(ErrorCode::kBadConfig, "agent_cards must be a file path or an array");
    }
  }
  if (auto a = doc.find("agents"); a != doc.end()) sc.agents = ParseAgents(*a, sc.cards);
  return sc;
}

}  // namespace

RunConfig ParseRunConfig(std::string_view json_text, const std::vector<std::string>& overrides,
                         const std::string& base_dir) {
  json doc = json::parse(json_text, nullptr, false, true);
  if (doc.is_discarded()) Fail(ErrorCode::kBadConfig, "config is not valid JSON");
  if (!doc.is_object()) Fail(ErrorCode::kBadConfig, "config must be a JSON object");
  for (const auto& o : overrides) ApplyOverride(doc, o);

  std::set<std::string> top = TopLevelScalars();
  for (const auto& [name, keys] : ScalarSections()) top.insert(name);
  top.insert({"tasks", "agent_cards", "agents"});
  CheckKeys(doc, top, "config");
  for (const auto& [name, keys] : ScalarSections()) {
    if (doc.contains(name)) CheckKeys(doc[name], keys, name);
  }
  auto section = [&](const char* name) { return doc.value(name, json::object()); };

  RunConfig cfg;
  cfg.seed = GetUnsigned(doc, "", "seed", cfg.seed);
  cfg.profile = GetString(doc, "", "profile", "");
  cfg.out_dir = GetString(doc, "", "out", cfg.out_dir);
  cfg.scenario = ParseScenario(doc, cfg.profile, base_dir);

  // Builds the vocabulary and action space; catches scenario-level mistakes
  // before any command runs.
  const Scenario scenario(cfg.scenario);

  const json reg = section("registry");
  cfg.ewma_alpha = GetDouble(reg, "registry", "ewma_alpha", cfg.ewma_alpha);
  if (!(cfg.ewma_alpha > 0.0 && cfg.ewma_alpha <= 1.0)) {
    Fail(ErrorCode::kBadConfig, "registry.ewma_alpha must lie in (0,1]");
  }

  const json router = section("router");
  RoutingWeights& w = cfg.trainer.routing;
  w.w_load = GetDouble(router, "router", "w_load", w.w_load);
  w.w_accuracy = GetDouble(router, "router", "w_accuracy", w.w_accuracy);
  w.w_latency = GetDouble(router, "router", "w_latency", w.w_latency);
  w.latency_ref_ms = GetDouble(router, "router", "latency_ref_ms", w.latency_ref_ms);
  w.w_cost = GetDouble(router, "router", "w_cost", w.w_cost);

  const json rewards = section("rewards");
  RewardWeights& rw = cfg.trainer.reward_weights;
  rw.lambda_acc = GetDouble(rewards, "rewards", "lambda_acc", rw.lambda_acc);
  rw.lambda_fmt = GetDouble(rewards, "rewards", "lambda_fmt", rw.lambda_fmt);
  rw.lambda_eff = GetDouble(rewards, "rewards", "lambda_eff", rw.lambda_eff);
  rw.lambda_qos = GetDouble(rewards, "rewards", "lambda_qos", rw.lambda_qos);
  rw.lambda_exp = GetDouble(rewards, "rewards", "lambda_exp", rw.lambda_exp);

  const json tr = section("trainer");
  TrainerConfig& t = cfg.trainer;
  t.seed = cfg.seed;
  t.group_size = GetUnsigned(tr, "trainer", "group_size", t.group_size);
  t.learning_rate = GetDouble(tr, "trainer", "learning_rate", t.learning_rate);
  t.iterations = GetUnsigned(tr, "trainer", "iterations", t.iterations);
  t.max_steps = GetUnsigned(tr, "trainer", "max_steps", t.max_steps);
  t.checkpoint_every = GetUnsigned(tr, "trainer", "checkpoint_every", t.checkpoint_every);
  t.adapt_routing = GetBool(tr, "trainer", "adapt_routing", t.adapt_routing);
  t.adapt_step = GetDouble(tr, "trainer", "adapt_step", t.adapt_step);
  t.exploration = ExplorationConfig::Defaults(scenario.actions().size());
  t.exploration.tau_high = GetDouble(tr, "trainer", "tau_high", t.exploration.tau_high);
  t.exploration.tau_low = GetDouble(tr, "trainer", "tau_low", t.exploration.tau_low);
  t.exploration.entropy_bonus =
      GetDouble(tr, "trainer", "entropy_bonus", t.exploration.entropy_bonus);
  t.exploration.branch_factor =
      GetUnsigned(tr, "trainer", "branch_factor", t.exploration.branch_factor);
  t.Validate();

  const json sft = section("sft");
  cfg.sft.steps = GetUnsigned(sft, "sft", "steps", cfg.sft.steps);
  cfg.sft.learning_rate = GetDouble(sft, "sft", "learning_rate", cfg.sft.learning_rate);
  cfg.sft.demos = GetUnsigned(sft, "sft", "demos", cfg.sft.demos);
  if (!(cfg.sft.learning_rate > 0.0)) Fail(ErrorCode::kBadConfig, "sft.learning_rate must be > 0");

  const json ev = section("eval");
  cfg.eval_episodes = GetUnsigned(ev, "eval", "episodes", cfg.eval_episodes);
  if (cfg.eval_episodes < 1) Fail(ErrorCode::kBadConfig, "eval.episodes must be >= 1");
  return cfg;
}

RunConfig LoadRunConfig(const std::string& path, const std::vector<std::string>& overrides) {
  const std::string text = ReadFile(path);
  const auto parent = std::filesystem::path(path).parent_path();
  return ParseRunConfig(text, overrides, parent.empty() ? "." : parent.string());
}

RunConfig DefaultRunConfig(const std::vector<std::string>& overrides) {
  return ParseRunConfig(R"({"profile": "case-study"})", overrides);
}

}  // namespace netcollab
