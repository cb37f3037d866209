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

#ifndef NETCOLLAB_ORCHESTRATOR_HPP_
#define NETCOLLAB_ORCHESTRATOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "netcollab/policy.hpp"
#include "netcollab/registry.hpp"
#include "netcollab/rng.hpp"
#include "netcollab/router.hpp"
#include "netcollab/scenario.hpp"
#include "netcollab/simenv.hpp"
#include "netcollab/trajectory.hpp"

namespace netcollab {

struct EpisodeOutcome {
  std::optional<Token> final_answer;
  double total_latency_ms = 0.0;
  std::size_t invocation_count = 0;
  bool sla_met = true;  // total_latency_ms <= task deadline
  std::optional<FailureReport> failure;
  // Action types actually invoked, in order.
  std::vector<std::string> delegation_signature;
};

struct StepRecord {
  Observation obs;
  std::size_t action_index = 0;
  double log_prob = 0.0;
  double entropy = 0.0;
};

struct EpisodeResult {
  Trajectory trajectory;
  EpisodeOutcome outcome;
  std::vector<StepRecord> steps;
};

enum class DecisionMode { kSample, kGreedy };

struct SampledDecision {
  Decision decision;
  std::size_t action_index = 0;
  double log_prob = 0.0;
  double entropy = 0.0;
};

// Step 0, no prior outcome, features copied from the task.
Observation Interpret(const TaskSpec& task);

// Samples (or, in greedy mode, takes the argmax of) the policy's distribution.
// Greedy mode consumes no randomness.
SampledDecision Decide(const Observation& obs, const Policy& policy, const ActionSpace& actions,
                       Rng& rng, DecisionMode mode = DecisionMode::kSample);

// Inserts the agent's informative span, then a system marker recording
// whether the agent succeeded. On MalformedAgentResponse the trajectory is
// left untouched.
void Integrate(Trajectory& traj, const AgentResponse& response, const std::string& card_id);

struct EpisodeSettings {
  RoutingWeights weights;
  std::size_t max_steps = 4;
  DecisionMode mode = DecisionMode::kSample;
};

// Runs decide / route / invoke / integrate until the policy answers, an
// error ends the episode, or max_steps decisions have been made. Failures are
// reported through the outcome, never thrown.
EpisodeResult ExecuteEpisode(const TaskSpec& task, const Policy& policy, const Scenario& scenario,
                             const Registry& registry, SimEnv& env, Rng& rng,
                             const EpisodeSettings& settings);

}  // namespace netcollab

#endif  // NETCOLLAB_ORCHESTRATOR_HPP_
