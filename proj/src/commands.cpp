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

#include "netcollab/commands.hpp"

#include <fmt/format.h>

#include "json.hpp"
#include "netcollab/error.hpp"
#include "netcollab/io.hpp"
#include "netcollab/router.hpp"

namespace netcollab {

namespace {

// Stream tags under the run seed; the trainer owns 1 and 2.
constexpr std::uint64_t kRunStream = 10;
constexpr std::uint64_t kEvalStream = 20;
constexpr std::uint64_t kDemoStream = 30;

EpisodeSettings SettingsFor(const RunConfig& cfg, DecisionMode mode) {
  EpisodeSettings s;
  s.weights = cfg.trainer.routing;
  s.max_steps = cfg.trainer.max_steps;
  s.mode = mode;
  return s;
}

std::string JoinNames(const Vocabulary& vocab, std::span<const Token> tokens) {
  std::string out;
  for (Token t : tokens) {
    if (!out.empty()) out += ' ';
    out += vocab.Name(t);
  }
  return out;
}

}  // namespace

std::string EvalSummary::ToJson() const {
  nlohmann::json j{{"episodes", episodes},
                   {"success_rate", success_rate},
                   {"mean_latency_ms", mean_latency_ms},
                   {"sla_violation_rate", sla_violation_rate},
                   {"mean_invocations", mean_invocations},
                   {"mean_reward", mean_reward},
                   {"failures", failures}};
  return j.dump(2);
}

std::string RenderEpisode(const TaskSpec& task, const EpisodeResult& episode,
                          const RewardVector& rewards, double scalar_reward,
                          const Vocabulary& vocab) {
  std::string out = fmt::format("task {} ({})\n", task.task_id, task.class_name);
  for (const Segment& s : episode.trajectory.segments()) {
    std::string label(SourceName(s.source()));
    if (s.source() == SegmentSource::kAgent) label += " " + s.card_id();
    out += fmt::format("  [{}] {}\n", label, JoinNames(vocab, s.tokens()));
  }
  const EpisodeOutcome& o = episode.outcome;
  out += fmt::format("outcome: answer={} failure={} invocations={} latency_ms={} sla_met={}\n",
                     o.final_answer ? vocab.Name(*o.final_answer) : std::string("-"),
                     o.failure ? std::string(FailureKindName(o.failure->kind)) : std::string("-"),
                     o.invocation_count, o.total_latency_ms, o.sla_met);
  out += fmt::format(
      "reward: accuracy={} format={} efficiency={} qos={} exploration={} scalar={}\n",
      rewards.accuracy, rewards.format, rewards.efficiency, rewards.qos, rewards.exploration,
      scalar_reward);
  return out;
}

Session::Session(RunConfig config)
    : config_(std::move(config)),
      scenario_(config_.scenario),
      registry_(scenario_.MakeRegistry(config_.ewma_alpha)),
      policy_(ObservationEncoder{scenario_.generator().FeatureDim(), config_.trainer.max_steps},
              scenario_.actions().size()) {}

void Session::set_policy(Policy policy) {
  if (policy.encoder() != policy_.encoder() || policy.num_actions() != policy_.num_actions()) {
    Fail(ErrorCode::kBadCheckpoint, "BadCheckpoint: policy shape does not match the scenario");
  }
  policy_ = std::move(policy);
}

void Session::LoadCheckpoint(std::string_view json_text) {
  const PolicyParams& p = policy_.params();
  policy_ = Policy(policy_.encoder(), CheckpointFromJson(json_text, p.rows(), p.cols()));
}

std::string Session::CheckpointJson() const { return CheckpointToJson(policy_.params()); }

RunResult Session::Run(const std::optional<std::string>& task_class,
                       const std::optional<std::string>& forced_action) const {
  RunResult r;
  if (task_class) {
    const auto& classes = scenario_.generator().classes;
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].name == *task_class) idx = i;
    }
    if (!idx) Fail(ErrorCode::kInvalidArgument, "unknown task class '" + *task_class + "'");
    r.task = MakeTask(scenario_.generator(), scenario_.vocab(), *idx, 0);
  } else {
    Rng task_rng(config_.seed, {kRunStream, 0});
    r.task = SampleTask(scenario_.generator(), scenario_.vocab(), task_rng, 0);
  }

  const Policy policy =
      forced_action ? Policy::Forced(policy_.encoder(), scenario_.actions().size(),
                                     scenario_.actions().Index(*forced_action))
                    : policy_;
  SimEnv env = scenario_.MakeEnv();
  Rng rng(config_.seed, {kRunStream, 1});
  r.episode = ExecuteEpisode(r.task, policy, scenario_, registry_, env, rng,
                             SettingsFor(config_, DecisionMode::kSample));
  NoveltyLedger ledger;
  r.rewards = ComputeRewards(r.episode, r.task, scenario_.vocab(), config_.trainer.max_steps, ledger);
  r.scalar_reward = Scalarize(r.rewards, config_.trainer.reward_weights);
  r.log_line = TrajectoryLogLine(r.task.task_id, r.episode, r.rewards, r.scalar_reward,
                                 scenario_.vocab());
  r.rendered = RenderEpisode(r.task, r.episode, r.rewards, r.scalar_reward, scenario_.vocab());
  r.failed = r.episode.outcome.failure.has_value();
  return r;
}

std::vector<SftSample> Session::GenerateDemonstrations(std::size_t dialogues) const {
  const ActionSpace& actions = scenario_.actions();
  const Vocabulary& vocab = scenario_.vocab();
  std::vector<SftSample> out;
  Rng rng(config_.seed, {kDemoStream});
  for (std::size_t d = 0; d < dialogues; ++d) {
    const TaskSpec task = SampleTask(scenario_.generator(), vocab, rng, d);
    Observation obs = Interpret(task);
    if (!task.required_action) {
      out.push_back({obs, actions.Index(vocab.Name(task.ground_truth))});
      continue;
    }
    out.push_back({obs, actions.Index(*task.required_action)});
    const auto integrate = scenario_.integrate_token();
    if (!integrate || config_.trainer.max_steps < 2) continue;

    SimEnv env = scenario_.MakeEnv();
    env.BeginTask(task);
    const std::string card =
        Route(*task.required_action, registry_, config_.trainer.routing);
    const AgentResponse resp =
        env.InvokeAgent(card, {*task.required_action, {task.payload}}, rng);
    obs.step_index = 1;
    obs.last_outcome = resp.succeeded ? OutcomeFlag::kAgentSuccess : OutcomeFlag::kAgentFailure;
    out.push_back({obs, actions.Index(vocab.Name(*integrate))});
  }
  return out;
}

SftResult Session::Sft(std::span<const SftSample> samples) {
  if (samples.empty()) throw BadDatasetError(0, "dataset has no samples");
  SftResult r;
  r.initial_loss = policy_.SftLoss(samples);
  for (std::size_t s = 0; s < config_.sft.steps; ++s) {
    policy_ = Policy(policy_.encoder(), SftUpdate(policy_, samples, config_.sft.learning_rate));
  }
  r.steps = config_.sft.steps;
  r.final_loss = policy_.SftLoss(samples);
  r.mean_demo_probability = policy_.MeanDemoProbability(samples);
  return r;
}

TrainingReport Session::Train(const CheckpointSink& on_checkpoint) {
  TrainingResult result = netcollab::Train(scenario_, config_.trainer, policy_, on_checkpoint);
  policy_ = std::move(result.policy);
  return std::move(result.report);
}

EvalSummary Session::Evaluate(std::size_t episodes, DecisionMode mode) const {
  if (episodes < 1) Fail(ErrorCode::kInvalidArgument, "episodes must be >= 1");
  const EpisodeSettings settings = SettingsFor(config_, mode);
  NoveltyLedger ledger;
  EvalSummary s;
  s.episodes = episodes;
  for (std::size_t e = 0; e < episodes; ++e) {
    Rng task_rng(config_.seed, {kEvalStream, e});
    const TaskSpec task = SampleTask(scenario_.generator(), scenario_.vocab(), task_rng, e);
    SimEnv env = scenario_.MakeEnv();
    Rng rng(config_.seed, {kEvalStream, e, 1});
    const EpisodeResult ep = ExecuteEpisode(task, policy_, scenario_, registry_, env, rng, settings);
    const RewardVector v =
        ComputeRewards(ep, task, scenario_.vocab(), config_.trainer.max_steps, ledger);
    s.success_rate += v.accuracy;
    s.mean_latency_ms += ep.outcome.total_latency_ms;
    s.sla_violation_rate += ep.outcome.sla_met ? 0.0 : 1.0;
    s.mean_invocations += static_cast<double>(ep.outcome.invocation_count);
    s.mean_reward += Scalarize(v, config_.trainer.reward_weights);
    if (ep.outcome.failure) ++s.failures[std::string(FailureKindName(ep.outcome.failure->kind))];
  }
  const double n = static_cast<double>(episodes);
  s.success_rate /= n;
  s.mean_latency_ms /= n;
  s.sla_violation_rate /= n;
  s.mean_invocations /= n;
  s.mean_reward /= n;
  return s;
}

}  // namespace netcollab
