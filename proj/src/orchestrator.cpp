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

#include "netcollab/orchestrator.hpp"

#include <cmath>

#include "netcollab/error.hpp"

namespace netcollab {

namespace {

// An integrate answer resolves to the latest agent result; without one it
// stays the integrate token, which is never a ground truth.
Token ResolveAnswer(const Trajectory& traj, Token chosen, const Scenario& scenario) {
  if (scenario.integrate_token() != chosen) return chosen;
  const auto& segs = traj.segments();
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    if (it->source() == SegmentSource::kAgent && !it->tokens().empty()) return it->tokens().front();
  }
  return chosen;
}

}  // namespace

Observation Interpret(const TaskSpec& task) {
  return Observation{task.features, 0, OutcomeFlag::kNone};
}

SampledDecision Decide(const Observation& obs, const Policy& policy, const ActionSpace& actions,
                       Rng& rng, DecisionMode mode) {
  if (policy.num_actions() != actions.size()) {
    Fail(ErrorCode::kInvalidArgument, "policy and action space sizes differ");
  }
  const std::vector<double> probs = policy.ActionDistribution(obs);
  SampledDecision out;
  out.action_index = mode == DecisionMode::kGreedy ? policy.Greedy(obs) : rng.Categorical(probs);
  out.decision = actions.At(out.action_index);
  out.log_prob = std::log(probs[out.action_index]);
  out.entropy = EntropyOf(probs);
  return out;
}

void Integrate(Trajectory& traj, const AgentResponse& response, const std::string& card_id) {
  if (!traj.is_open()) Fail(ErrorCode::kEpisodeClosed, "EpisodeClosed");
  traj.InsertAgentResponse(card_id, response.raw_tokens);
  traj.AppendSystem({response.succeeded ? Vocabulary::kAgentOk : Vocabulary::kAgentFail});
}

EpisodeResult ExecuteEpisode(const TaskSpec& task, const Policy& policy, const Scenario& scenario,
                             const Registry& registry, SimEnv& env, Rng& rng,
                             const EpisodeSettings& settings) {
  if (settings.max_steps < 1) Fail(ErrorCode::kInvalidArgument, "max_steps must be >= 1");
  const Vocabulary& vocab = scenario.vocab();
  env.BeginTask(task);
  const double clock_start = env.clock_ms();

  EpisodeResult result;
  Trajectory& traj = result.trajectory;
  EpisodeOutcome& outcome = result.outcome;
  Observation obs = Interpret(task);

  for (std::size_t step = 0; step < settings.max_steps && traj.is_open(); ++step) {
    obs.step_index = step;
    const SampledDecision d = Decide(obs, policy, scenario.actions(), rng, settings.mode);
    result.steps.push_back({obs, d.action_index, d.log_prob, d.entropy});

    if (d.decision.kind == Decision::Kind::kDirectAnswer) {
      traj.AppendCore({d.decision.answer});
      traj.FinishAnswered(ResolveAnswer(traj, d.decision.answer, scenario));
      break;
    }

    const std::string& action = d.decision.action_type;
    traj.AppendCore({Vocabulary::kActionOpen, vocab.Get(action), task.payload,
                     Vocabulary::kActionClose});
    std::string card_id;
    try {
      card_id = Route(action, registry, settings.weights);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoAgentForAction) throw;
      traj.FinishFailed({FailureKind::kNoAgentForAction, traj.token_count(), e.what()});
      break;
    }
    const AgentResponse response =
        env.InvokeAgent(card_id, ActionInvocation{action, {task.payload}}, rng);
    try {
      Integrate(traj, response, card_id);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMalformedAgentResponse) throw;
      traj.FinishFailed({FailureKind::kMalformedAgentResponse, traj.token_count(), e.what()});
      break;
    }
    ++outcome.invocation_count;
    outcome.delegation_signature.push_back(action);
    obs.last_outcome = response.succeeded ? OutcomeFlag::kAgentSuccess : OutcomeFlag::kAgentFailure;
  }
  if (traj.is_open()) traj.FinishTruncated();

  const Terminal& term = traj.terminal();
  if (term.kind == Terminal::Kind::kAnswered) outcome.final_answer = term.answer;
  if (term.kind == Terminal::Kind::kFailed) outcome.failure = term.reason;
  if (term.kind == Terminal::Kind::kTruncated) {
    outcome.failure = FailureReport{FailureKind::kTruncated, traj.token_count(),
                                    "no answer within max_steps"};
  }
  if (!outcome.failure) outcome.failure = Validate(traj, vocab);
  outcome.total_latency_ms = env.clock_ms() - clock_start;
  outcome.sla_met = outcome.total_latency_ms <= task.sla_deadline_ms;
  return result;
}

}  // namespace netcollab
