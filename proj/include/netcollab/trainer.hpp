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

#ifndef NETCOLLAB_TRAINER_HPP_
#define NETCOLLAB_TRAINER_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netcollab/orchestrator.hpp"
#include "netcollab/policy.hpp"
#include "netcollab/rewards.hpp"
#include "netcollab/scenario.hpp"

namespace netcollab {

struct ExplorationConfig {
  double tau_high = 0.0;
  double tau_low = 0.0;
  std::size_t branch_factor = 2;
  double entropy_bonus = 0.1;

  // tau_high = 0.8 ln(n), tau_low = 0.05 ln(n).
  static ExplorationConfig Defaults(std::size_t num_actions);
  // Throws BadConfig unless 0 <= tau_low < tau_high, branch_factor >= 1 and
  // entropy_bonus >= 0.
  void Validate() const;
};

struct TrainerConfig {
  std::uint64_t seed = 42;
  std::size_t group_size = 8;
  double learning_rate = 0.05;
  std::size_t iterations = 500;
  std::size_t max_steps = 4;
  ExplorationConfig exploration;
  RewardWeights reward_weights;
  RoutingWeights routing;
  // When set, routing weights follow AdaptWeights after every episode.
  bool adapt_routing = false;
  double adapt_step = 0.1;
  std::size_t checkpoint_every = 0;  // 0 disables periodic checkpoints

  // Throws BadConfig (or InvalidWeights for the reward weights).
  void Validate() const;
};

struct RolloutGroup {
  TaskSpec task;
  std::vector<EpisodeResult> episodes;
  std::vector<RewardVector> reward_vectors;
  std::vector<double> scalar_rewards;
};

struct RolloutContext {
  const Scenario* scenario = nullptr;
  const Registry* registry = nullptr;
  EpisodeSettings settings;
  RewardWeights reward_weights;
  std::function<SimEnv()> env_factory;
};

// G episodes of one task. Episode i draws from the stream (base_seed, i) in a
// fresh environment; ledger visits are applied in episode order.
RolloutGroup RollOutGroup(const TaskSpec& task, const Policy& policy, std::size_t group_size,
                          const RolloutContext& ctx, std::uint64_t base_seed,
                          NoveltyLedger& ledger);

inline constexpr double kAdvantageEpsilon = 1e-8;

// (r_i - mean) / (population std + 1e-8); all zeros when every reward is equal.
std::vector<double> GroupAdvantage(std::span<const double> rewards);

struct EntropyControlResult {
  bool triggered = false;
  std::vector<double> corrected;  // one per decision step
};

// A'_t = A + beta (H_t - mean_t H_t); triggered iff some H_t > tau_high.
EntropyControlResult EntropyControl(std::span<const StepRecord> steps, double advantage,
                                    const ExplorationConfig& config);

// corrected[g][e][t] is the advantage for step t of episode e in group g.
using StepAdvantages = std::vector<std::vector<std::vector<double>>>;

// theta + lr (1/G) sum_episodes sum_steps A'_t grad ln pi(a_t | o_t), with G
// the mean group size (episodes / groups). Only the step records enter the update, so agent
// and system segments cannot influence it. learning_rate must be > 0.
PolicyParams MaskedPolicyUpdate(const Policy& policy, std::span<const RolloutGroup> groups,
                                const StepAdvantages& corrected, double learning_rate);

struct IterationStats {
  std::size_t iteration = 0;
  double mean_reward = 0.0;
  double success_rate = 0.0;
  double mean_entropy = 0.0;
  std::size_t triggers = 0;
  std::size_t episodes = 0;
};

struct TrainingReport {
  std::vector<IterationStats> iterations;
  // Iterations whose mean decision entropy fell below tau_low.
  std::size_t collapse_warnings = 0;

  // Header "iteration,mean_reward,success_rate,mean_entropy,triggers".
  std::string ToCsv() const;
};

struct TrainingResult {
  TrainingReport report;
  Policy policy;
};

using CheckpointSink = std::function<void(std::size_t iteration, const Policy& policy)>;

// Each iteration: sample a task, roll out a group (plus branch_factor extra
// groups of the previous task when it triggered exploration), compute group
// advantages and entropy corrections, then take one masked policy step.
TrainingResult Train(const Scenario& scenario, const TrainerConfig& config, Policy initial,
                     const CheckpointSink& on_checkpoint = {});

}  // namespace netcollab

#endif  // NETCOLLAB_TRAINER_HPP_
