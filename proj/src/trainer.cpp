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

#include "netcollab/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "netcollab/error.hpp"

namespace netcollab {

namespace {

// Stream tags under the run seed.
constexpr std::uint64_t kTaskStream = 1;
constexpr std::uint64_t kRolloutStream = 2;

}  // namespace

ExplorationConfig ExplorationConfig::Defaults(std::size_t num_actions) {
  const double max_entropy = std::log(static_cast<double>(num_actions));
  ExplorationConfig c;
  c.tau_high = 0.8 * max_entropy;
  c.tau_low = 0.05 * max_entropy;
  return c;
}

void ExplorationConfig::Validate() const {
  if (!std::isfinite(tau_low) || !std::isfinite(tau_high) || tau_low < 0.0) {
    Fail(ErrorCode::kBadConfig, "entropy thresholds must be finite and >= 0");
  }
  if (!(tau_low < tau_high)) Fail(ErrorCode::kBadConfig, "tau_low must be < tau_high");
  if (branch_factor < 1) Fail(ErrorCode::kBadConfig, "branch_factor must be >= 1");
  if (!std::isfinite(entropy_bonus) || entropy_bonus < 0.0) {
    Fail(ErrorCode::kBadConfig, "entropy_bonus must be >= 0");
  }
}

void TrainerConfig::Validate() const {
  if (group_size < 2) Fail(ErrorCode::kBadConfig, "group_size must be >= 2");
  if (iterations < 1) Fail(ErrorCode::kBadConfig, "iterations must be >= 1");
  if (!std::isfinite(learning_rate) || learning_rate < 0.0) {
    Fail(ErrorCode::kBadConfig, "learning_rate must be >= 0");
  }
  if (max_steps < 1) Fail(ErrorCode::kBadConfig, "max_steps must be >= 1");
  if (!(adapt_step > 0.0 && adapt_step < 1.0)) {
    Fail(ErrorCode::kBadConfig, "adapt_step must lie in (0,1)");
  }
  exploration.Validate();
  reward_weights.Validate();
  try {
    ValidateWeights(routing);
  } catch (const Error& e) {
    Fail(ErrorCode::kBadConfig, e.what());
  }
}

RolloutGroup RollOutGroup(const TaskSpec& task, const Policy& policy, std::size_t group_size,
                          const RolloutContext& ctx, std::uint64_t base_seed,
                          NoveltyLedger& ledger) {
  if (group_size < 2) Fail(ErrorCode::kBadConfig, "group_size must be >= 2");
  RolloutGroup group;
  group.task = task;
  group.episodes.reserve(group_size);
  for (std::size_t i = 0; i < group_size; ++i) {
    Rng rng(base_seed, {i});
    SimEnv env = ctx.env_factory ? ctx.env_factory() : ctx.scenario->MakeEnv();
    group.episodes.push_back(
        ExecuteEpisode(task, policy, *ctx.scenario, *ctx.registry, env, rng, ctx.settings));
  }
  for (const auto& ep : group.episodes) {
    const RewardVector v =
        ComputeRewards(ep, task, ctx.scenario->vocab(), ctx.settings.max_steps, ledger);
    group.reward_vectors.push_back(v);
    group.scalar_rewards.push_back(Scalarize(v, ctx.reward_weights));
  }
  return group;
}

std::vector<double> GroupAdvantage(std::span<const double> rewards) {
  std::vector<double> adv(rewards.size(), 0.0);
  if (rewards.empty()) return adv;
  if (std::all_of(rewards.begin(), rewards.end(), [&](double r) { return r == rewards[0]; })) {
    return adv;
  }
  const double n = static_cast<double>(rewards.size());
  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= n;
  double var = 0.0;
  for (double r : rewards) var += (r - mean) * (r - mean);
  const double std_dev = std::sqrt(var / n);
  if (std_dev == 0.0) return adv;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    adv[i] = (rewards[i] - mean) / (std_dev + kAdvantageEpsilon);
  }
  return adv;
}

EntropyControlResult EntropyControl(std::span<const StepRecord> steps, double advantage,
                                    const ExplorationConfig& config) {
  EntropyControlResult out;
  out.corrected.assign(steps.size(), advantage);
  if (steps.empty()) return out;
  double mean_h = 0.0;
  for (const auto& s : steps) {
    mean_h += s.entropy;
    if (s.entropy > config.tau_high) out.triggered = true;
  }
  mean_h /= static_cast<double>(steps.size());
  if (config.entropy_bonus == 0.0) return out;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    out.corrected[t] = advantage + config.entropy_bonus * (steps[t].entropy - mean_h);
  }
  return out;
}

PolicyParams MaskedPolicyUpdate(const Policy& policy, std::span<const RolloutGroup> groups,
                                const StepAdvantages& corrected, double learning_rate) {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    Fail(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  if (corrected.size() != groups.size()) {
    Fail(ErrorCode::kInvalidArgument, "advantage groups do not match rollout groups");
  }
  const PolicyParams& theta = policy.params();
  PolicyParams grad(theta.rows(), theta.cols());
  std::size_t episodes = 0;
  bool any_nonzero = false;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& eps = groups[g].episodes;
    if (corrected[g].size() != eps.size()) {
      Fail(ErrorCode::kInvalidArgument, "advantage episodes do not match rollout episodes");
    }
    for (std::size_t e = 0; e < eps.size(); ++e) {
      ++episodes;
      const auto& steps = eps[e].steps;
      if (corrected[g][e].size() != steps.size()) {
        Fail(ErrorCode::kInvalidArgument, "advantage steps do not match step records");
      }
      for (std::size_t t = 0; t < steps.size(); ++t) {
        const double a = corrected[g][e][t];
        if (a == 0.0) continue;
        any_nonzero = true;
        grad.AddScaled(policy.LogProbAndGrad(steps[t].obs, steps[t].action_index).grad, a);
      }
    }
  }
  PolicyParams next = theta;
  if (!any_nonzero || episodes == 0) return next;
  next.AddScaled(grad, learning_rate * static_cast<double>(groups.size()) / static_cast<double>(episodes));
  return next;
}

std::string TrainingReport::ToCsv() const {
  std::string out = "iteration,mean_reward,success_rate,mean_entropy,triggers\n";
  for (const auto& r : iterations) {
    out += fmt::format("{},{},{},{},{}\n", r.iteration, r.mean_reward, r.success_rate,
                       r.mean_entropy, r.triggers);
  }
  return out;
}

TrainingResult Train(const Scenario& scenario, const TrainerConfig& config, Policy initial,
                     const CheckpointSink& on_checkpoint) {
  config.Validate();
  if (initial.num_actions() != scenario.actions().size() ||
      initial.encoder().feature_dim != scenario.generator().FeatureDim() ||
      initial.encoder().max_steps != config.max_steps) {
    Fail(ErrorCode::kBadCheckpoint, "initial policy shape does not match the scenario");
  }

  const Registry registry = scenario.MakeRegistry();
  RolloutContext ctx;
  ctx.scenario = &scenario;
  ctx.registry = &registry;
  ctx.settings.weights = config.routing;
  ctx.settings.max_steps = config.max_steps;
  ctx.settings.mode = DecisionMode::kSample;
  ctx.reward_weights = config.reward_weights;

  Rng task_rng(config.seed, {kTaskStream});
  NoveltyLedger ledger;
  TrainingResult result{TrainingReport{}, std::move(initial)};
  std::optional<TaskSpec> branch_task;

  for (std::size_t it = 0; it < config.iterations; ++it) {
    std::vector<TaskSpec> tasks;
    tasks.push_back(SampleTask(scenario.generator(), scenario.vocab(), task_rng, it));
    if (branch_task) {
      for (std::size_t b = 0; b < config.exploration.branch_factor; ++b) tasks.push_back(*branch_task);
      branch_task.reset();
    }

    std::vector<RolloutGroup> groups;
    StepAdvantages corrected;
    IterationStats stats;
    stats.iteration = it;
    double reward_sum = 0.0;
    double success_sum = 0.0;
    double entropy_sum = 0.0;
    std::size_t step_count = 0;

    for (std::size_t k = 0; k < tasks.size(); ++k) {
      const std::uint64_t base_seed = Rng(config.seed, {kRolloutStream, it, k}).NextU64();
      groups.push_back(
          RollOutGroup(tasks[k], result.policy, config.group_size, ctx, base_seed, ledger));
      const RolloutGroup& group = groups.back();
      const std::vector<double> adv = GroupAdvantage(group.scalar_rewards);

      bool group_triggered = false;
      auto& group_corrected = corrected.emplace_back();
      for (std::size_t e = 0; e < group.episodes.size(); ++e) {
        const auto& ep = group.episodes[e];
        EntropyControlResult ec = EntropyControl(ep.steps, adv[e], config.exploration);
        group_triggered = group_triggered || ec.triggered;
        group_corrected.push_back(std::move(ec.corrected));

        reward_sum += group.scalar_rewards[e];
        success_sum += group.reward_vectors[e].accuracy;
        for (const auto& s : ep.steps) entropy_sum += s.entropy;
        step_count += ep.steps.size();
        if (config.adapt_routing) {
          ctx.settings.weights = AdaptWeights(
              ctx.settings.weights, {ep.outcome.total_latency_ms, ep.outcome.sla_met},
              config.adapt_step);
        }
      }
      if (group_triggered) {
        ++stats.triggers;
        // Only the freshly sampled task schedules branches; branched groups
        // do not cascade.
        if (k == 0) branch_task = tasks[k];
      }
    }

    stats.episodes = groups.size() * config.group_size;
    const double n = static_cast<double>(stats.episodes);
    stats.mean_reward = reward_sum / n;
    stats.success_rate = success_sum / n;
    stats.mean_entropy = step_count == 0 ? 0.0 : entropy_sum / static_cast<double>(step_count);
    if (stats.mean_entropy < config.exploration.tau_low) ++result.report.collapse_warnings;
    result.report.iterations.push_back(stats);

    if (config.learning_rate > 0.0) {
      PolicyParams next =
          MaskedPolicyUpdate(result.policy, groups, corrected, config.learning_rate);
      result.policy = Policy(result.policy.encoder(), std::move(next));
    }
    if (on_checkpoint && config.checkpoint_every > 0 && (it + 1) % config.checkpoint_every == 0) {
      on_checkpoint(it + 1, result.policy);
    }
  }
  return result;
}

}  // namespace netcollab
