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

#ifndef NETCOLLAB_COMMANDS_HPP_
#define NETCOLLAB_COMMANDS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcollab/config.hpp"
#include "netcollab/orchestrator.hpp"
#include "netcollab/rewards.hpp"
#include "netcollab/scenario.hpp"
#include "netcollab/trainer.hpp"

namespace netcollab {

struct RunResult {
  TaskSpec task;
  EpisodeResult episode;
  RewardVector rewards;
  double scalar_reward = 0.0;
  std::string log_line;  // JSONL record, no trailing newline
  std::string rendered;  // human-readable transcript
  bool failed = false;   // failure outcome (exit code 2 at the CLI)
};

struct SftResult {
  double initial_loss = 0.0;
  double final_loss = 0.0;
  double mean_demo_probability = 0.0;
  std::size_t steps = 0;
};

struct EvalSummary {
  std::size_t episodes = 0;
  double success_rate = 0.0;
  double mean_latency_ms = 0.0;
  double sla_violation_rate = 0.0;
  double mean_invocations = 0.0;
  double mean_reward = 0.0;
  std::map<std::string, std::size_t> failures;  // by failure kind

  std::string ToJson() const;
};

// One configured deployment plus the current policy. The policy starts
// uniform (all-zero parameters) until a checkpoint, SFT or training replaces
// it. Every command is a pure function of (config, seed, policy).
class Session {
 public:
  explicit Session(RunConfig config);

  const RunConfig& config() const { return config_; }
  const Scenario& scenario() const { return scenario_; }
  const Policy& policy() const { return policy_; }
  void set_policy(Policy policy);

  // Error: BadCheckpoint.
  void LoadCheckpoint(std::string_view json_text);
  std::string CheckpointJson() const;

  // One seeded episode. task_class picks the class by name; forced_action
  // replaces the policy with one that always takes the named action.
  // Error: InvalidArgument for unknown names.
  RunResult Run(const std::optional<std::string>& task_class = std::nullopt,
                const std::optional<std::string>& forced_action = std::nullopt) const;

  // Scripted single-call annotator: direct classes answer their ground
  // truth; agent classes delegate to the required action, then take the
  // integrate action whatever the agent returned.
  std::vector<SftSample> GenerateDemonstrations(std::size_t dialogues) const;

  // Full-batch SFT for config.sft.steps steps. Error: BadDataset (empty).
  SftResult Sft(std::span<const SftSample> samples);

  TrainingReport Train(const CheckpointSink& on_checkpoint = {});

  EvalSummary Evaluate(std::size_t episodes, DecisionMode mode = DecisionMode::kGreedy) const;

 private:
  RunConfig config_;
  Scenario scenario_;
  Registry registry_;
  Policy policy_;
};

std::string RenderEpisode(const TaskSpec& task, const EpisodeResult& episode,
                          const RewardVector& rewards, double scalar_reward,
                          const Vocabulary& vocab);

}  // namespace netcollab

#endif  // NETCOLLAB_COMMANDS_HPP_
