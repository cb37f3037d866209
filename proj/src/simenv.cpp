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

#include "netcollab/simenv.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "netcollab/error.hpp"

namespace netcollab {

namespace {

bool InUnit(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

}  // namespace

void ValidateGenerator(const GeneratorConfig& config) {
  if (config.classes.empty()) Fail(ErrorCode::kBadConfig, "task generator needs at least one class");
  double total = 0.0;
  std::set<std::string> names;
  for (const auto& c : config.classes) {
    if (c.name.empty()) Fail(ErrorCode::kBadConfig, "task class name must be nonempty");
    if (!names.insert(c.name).second) {
      Fail(ErrorCode::kBadConfig, "duplicate task class '" + c.name + "'");
    }
    if (!InUnit(c.probability)) {
      Fail(ErrorCode::kBadConfig, "task class '" + c.name + "' probability must lie in [0,1]");
    }
    if (!std::isfinite(c.sla_deadline_ms) || c.sla_deadline_ms <= 0.0) {
      Fail(ErrorCode::kBadConfig, "task class '" + c.name + "' sla_deadline_ms must be > 0");
    }
    if (c.difficulty != 0 && c.difficulty != 1) {
      Fail(ErrorCode::kBadConfig, "task class '" + c.name + "' difficulty must be 0 or 1");
    }
    if (c.ground_truth.empty()) {
      Fail(ErrorCode::kBadConfig, "task class '" + c.name + "' needs a ground_truth");
    }
    total += c.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    Fail(ErrorCode::kBadConfig,
         "task class probabilities must sum to 1 (got " + std::to_string(total) + ")");
  }
}

TaskSpec MakeTask(const GeneratorConfig& config, const Vocabulary& vocab,
                  std::size_t class_index, std::uint64_t task_id) {
  if (class_index >= config.classes.size()) {
    Fail(ErrorCode::kInvalidArgument, "task class index out of range");
  }
  const TaskClass& c = config.classes[class_index];
  TaskSpec task;
  task.task_id = task_id;
  task.class_index = class_index;
  task.class_name = c.name;
  task.features.assign(config.FeatureDim(), 0.0);
  task.features[class_index] = 1.0;
  task.features.back() = static_cast<double>(c.difficulty);
  task.required_action = c.required_action;
  task.ground_truth = vocab.Get(c.ground_truth);
  task.payload = vocab.Get(c.payload);
  task.sla_deadline_ms = c.sla_deadline_ms;
  return task;
}

TaskSpec SampleTask(const GeneratorConfig& config, const Vocabulary& vocab, Rng& rng,
                    std::uint64_t task_id) {
  ValidateGenerator(config);
  std::vector<double> probs;
  probs.reserve(config.classes.size());
  for (const auto& c : config.classes) probs.push_back(c.probability);
  return MakeTask(config, vocab, rng.Categorical(probs), task_id);
}

void ValidateSimAgent(const SimAgent& agent) {
  const std::string& id = agent.card.card_id;
  if (!(std::isfinite(agent.latency_base_ms) && agent.latency_base_ms > 0.0)) {
    Fail(ErrorCode::kBadConfig, "agent '" + id + "' latency_base_ms must be > 0");
  }
  if (!(std::isfinite(agent.latency_jitter_ms) && agent.latency_jitter_ms >= 0.0)) {
    Fail(ErrorCode::kBadConfig, "agent '" + id + "' latency_jitter_ms must be >= 0");
  }
  if (!InUnit(agent.load_per_call) || !InUnit(agent.initial_load)) {
    Fail(ErrorCode::kBadConfig, "agent '" + id + "' loads must lie in [0,1]");
  }
  std::set<std::string> keys;
  for (const auto& [action, p] : agent.success_prob) {
    if (!InUnit(p)) {
      Fail(ErrorCode::kBadConfig, "agent '" + id + "' success_prob must lie in [0,1]");
    }
    keys.insert(action);
  }
  if (keys != agent.card.supported_actions) {
    Fail(ErrorCode::kBadConfig,
         "agent '" + id + "' success_prob keys must match supported_actions");
  }
}

SimEnv::SimEnv(std::vector<SimAgent> agents) {
  for (auto& a : agents) {
    ValidateSimAgent(a);
    const std::string id = a.card.card_id;
    loads_[id] = a.initial_load;
    if (!agents_.emplace(id, std::move(a)).second) {
      Fail(ErrorCode::kBadConfig, "duplicate simulated agent '" + id + "'");
    }
  }
}

void SimEnv::BeginTask(const TaskSpec& task) {
  ground_truth_ = task.ground_truth;
  required_action_ = task.required_action;
}

AgentResponse SimEnv::InvokeAgent(const std::string& card_id, const ActionInvocation& invocation,
                                  Rng& rng) {
  auto it = agents_.find(card_id);
  if (it == agents_.end()) Fail(ErrorCode::kUnknownCard, "UnknownCard: '" + card_id + "'");
  const SimAgent& agent = it->second;
  auto prob = agent.success_prob.find(invocation.action_type);
  if (prob == agent.success_prob.end()) {
    Fail(ErrorCode::kUnsupportedAction,
         "UnsupportedAction: '" + card_id + "' does not handle '" + invocation.action_type + "'");
  }
  if (!ground_truth_) Fail(ErrorCode::kInvalidArgument, "InvokeAgent before BeginTask");

  for (auto& [id, load] : loads_) load *= kLoadDecay;
  double& load = loads_[card_id];

  AgentResponse r;
  const bool competent = required_action_ == invocation.action_type;
  r.succeeded = rng.Bernoulli(prob->second) && competent;
  // The jitter draw is unconditional so the stream layout does not depend on
  // the jitter setting.
  const double jitter = rng.Uniform(0.0, agent.latency_jitter_ms);
  r.latency_ms = agent.latency_base_ms * (1.0 + load) + jitter;
  load = std::clamp(load + agent.load_per_call, 0.0, 1.0);
  clock_ms_ += r.latency_ms;
  r.raw_tokens = {Vocabulary::kNoise, Vocabulary::kAnsOpen,
                  r.succeeded ? *ground_truth_ : Vocabulary::kWrong, Vocabulary::kAnsClose};
  return r;
}

double SimEnv::load(const std::string& card_id) const {
  auto it = loads_.find(card_id);
  if (it == loads_.end()) Fail(ErrorCode::kUnknownCard, "UnknownCard: '" + card_id + "'");
  return it->second;
}

ScenarioConfig PresetCaseStudy(double p_direct, double p_network_analysis,
                               double p_protocol_query) {
  ScenarioConfig cfg;
  cfg.generator.classes = {
      {"direct_qa", p_direct, std::nullopt, "ack", "query", 0, 300.0},
      {"network_analysis", p_network_analysis, "network_analysis", "kpi_report", "kpi_drop", 1,
       300.0},
      {"protocol_query", p_protocol_query, "protocol_query", "spec_clause", "rrc_setup", 1, 300.0},
  };
  cfg.direct_answers = {"ack", "nack", "integrate"};
  cfg.integrate_token = "integrate";
  cfg.action_types = {"network_analysis", "protocol_query"};

  const AgentMetrics metrics{0.1, 0.9, 50.0, 20.0, 0};
  AgentCard na{"na-1", "native", {"network_analysis"}, "sim://network-analysis", 1.0};
  AgentCard pq{"pq-1", "native", {"protocol_query"}, "sim://protocol-query", 1.0};
  cfg.cards = {{na, metrics}, {pq, metrics}};
  cfg.agents = {
      {na, {{"network_analysis", 0.9}}, 50.0, 10.0, 0.2, metrics.load},
      {pq, {{"protocol_query", 0.9}}, 50.0, 10.0, 0.2, metrics.load},
  };
  return cfg;
}

}  // namespace netcollab
