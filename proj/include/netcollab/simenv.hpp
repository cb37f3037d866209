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

#ifndef NETCOLLAB_SIMENV_HPP_
#define NETCOLLAB_SIMENV_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcollab/registry.hpp"
#include "netcollab/rng.hpp"
#include "netcollab/trajectory.hpp"
#include "netcollab/vocabulary.hpp"

namespace netcollab {

struct TaskClass {
  std::string name;
  double probability = 0.0;
  // Absent for tasks the core can answer on its own.
  std::optional<std::string> required_action;
  std::string ground_truth;
  // Goal literal passed to the agent when this task is delegated.
  std::string payload = "query";
  int difficulty = 0;  // 0 or 1
  double sla_deadline_ms = 300.0;
};

struct GeneratorConfig {
  std::vector<TaskClass> classes;

  // One-hot class indicator followed by the difficulty bit.
  std::size_t FeatureDim() const { return classes.size() + 1; }
};

// Throws BadConfig: no classes, probabilities outside [0,1] or not summing to
// 1 within 1e-9, nonpositive deadline, difficulty not 0/1, duplicate names.
void ValidateGenerator(const GeneratorConfig& config);

struct TaskSpec {
  std::uint64_t task_id = 0;
  std::size_t class_index = 0;
  std::string class_name;
  std::vector<double> features;
  std::optional<std::string> required_action;
  Token ground_truth{};
  Token payload{};
  double sla_deadline_ms = 0.0;
};

// Builds the task for a given class; features depend on the class only.
TaskSpec MakeTask(const GeneratorConfig& config, const Vocabulary& vocab,
                  std::size_t class_index, std::uint64_t task_id = 0);

// Draws a class from the configured distribution. Error: BadConfig.
TaskSpec SampleTask(const GeneratorConfig& config, const Vocabulary& vocab, Rng& rng,
                    std::uint64_t task_id = 0);

struct SimAgent {
  AgentCard card;
  std::map<std::string, double> success_prob;  // per supported action
  double latency_base_ms = 50.0;
  double latency_jitter_ms = 0.0;
  double load_per_call = 0.0;
  double initial_load = 0.0;
};

// Throws BadConfig on out-of-range fields or when success_prob keys differ
// from card.supported_actions.
void ValidateSimAgent(const SimAgent& agent);

struct AgentResponse {
  std::vector<Token> raw_tokens;
  double latency_ms = 0.0;
  bool succeeded = false;
};

// Simulated network of specialized agents with a simulated clock.
//
// An agent can only resolve a task whose required action is the action it
// was invoked for; any other invocation yields the wrong-answer token.
//
// Every call first decays all loads by kLoadDecay, then computes the latency
// from the callee's current load, then adds the callee's load_per_call
// (clamped to 1) and advances the clock by the latency.
class SimEnv {
 public:
  static constexpr double kLoadDecay = 0.9;

  explicit SimEnv(std::vector<SimAgent> agents);

  void BeginTask(const TaskSpec& task);

  // Errors: UnknownCard, UnsupportedAction, InvalidArgument (no task begun).
  AgentResponse InvokeAgent(const std::string& card_id, const ActionInvocation& invocation,
                            Rng& rng);

  double clock_ms() const { return clock_ms_; }
  double load(const std::string& card_id) const;
  bool HasAgent(const std::string& card_id) const { return agents_.count(card_id) != 0; }

 private:
  std::map<std::string, SimAgent> agents_;
  std::map<std::string, double> loads_;
  double clock_ms_ = 0.0;
  std::optional<Token> ground_truth_;
  std::optional<std::string> required_action_;
};

// Everything needed to stand up a simulated deployment: symbolic vocabulary,
// task distribution, agent behaviour and the cards announced to the registry.
struct ScenarioConfig {
  GeneratorConfig generator;
  std::vector<std::string> direct_answers;
  // One of direct_answers may be designated as the integrate token.
  std::optional<std::string> integrate_token;
  std::vector<std::string> action_types;
  std::vector<DiscoveredAgent> cards;
  std::vector<SimAgent> agents;
};

// Agent pair plus the three-class task mix used throughout the examples and
// tests. Probabilities are (direct, network_analysis, protocol_query).
ScenarioConfig PresetCaseStudy(double p_direct = 0.2, double p_network_analysis = 0.4,
                               double p_protocol_query = 0.4);

}  // namespace netcollab

#endif  // NETCOLLAB_SIMENV_HPP_
