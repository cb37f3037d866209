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

#include "support/fixtures.hpp"

#include <tuple>

namespace netcollab::testing {

RunConfig CaseStudyConfig() { return DefaultRunConfig(); }

RunConfig TinyConfig() { return DefaultRunConfig({"trainer.max_steps=2"}); }

Policy RandomPolicy(const ObservationEncoder& enc, std::size_t num_actions, Rng& rng,
                    double scale) {
  PolicyParams p(num_actions, enc.dim());
  for (double& v : p.mutable_values()) v = rng.Uniform(-scale, scale);
  return Policy(enc, std::move(p));
}

Observation RandomObservation(const ObservationEncoder& enc, Rng& rng) {
  Observation obs;
  obs.features.assign(enc.feature_dim, 0.0);
  if (enc.feature_dim > 1) {
    const auto cls = static_cast<std::size_t>(rng.Uniform() * static_cast<double>(enc.feature_dim - 1));
    obs.features[cls] = 1.0;
  }
  if (enc.feature_dim > 0) obs.features.back() = rng.Bernoulli(0.5) ? 1.0 : 0.0;
  obs.step_index = static_cast<std::size_t>(rng.Uniform() * static_cast<double>(enc.max_steps));
  obs.last_outcome = static_cast<OutcomeFlag>(static_cast<int>(rng.Uniform() * 3.0));
  return obs;
}

std::vector<LabeledTrajectory> IndicatorDisorderFixtures(const Scenario& scenario) {
  const Vocabulary& v = scenario.vocab();
  const Token na = v.Get("network_analysis");
  const Token payload = v.Get("kpi_drop");
  const Token ack = v.Get("ack");
  const Token open = Vocabulary::kActionOpen;
  const Token close = Vocabulary::kActionClose;

  std::vector<LabeledTrajectory> out;
  auto add = [&](std::string label, std::vector<Token> core, bool answered) {
    Trajectory t;
    t.AppendCore(std::move(core));
    if (answered) t.FinishAnswered(ack);
    out.push_back({std::move(label), std::move(t)});
  };
  add("reversed", {close, na, payload, open}, true);
  add("nested", {open, open, na, close, close}, true);
  add("unclosed", {open, na, payload}, true);
  add("stray-close", {na, close}, true);
  add("empty-span", {open, close}, true);
  add("answer-tag-in-core", {Vocabulary::kAnsOpen, ack, Vocabulary::kAnsClose}, true);
  add("span-without-type", {open, payload, na, close}, false);

  // Disorder after a legitimate delegation round.
  Trajectory t = WellFormedTrajectory(scenario, "network_analysis", 1, ack);
  Trajectory late;
  for (const Segment& s : t.segments()) {
    if (s.source() == SegmentSource::kCore) late.AppendCore(s.tokens());
    if (s.source() == SegmentSource::kAgent) {
      late.InsertAgentResponse(s.card_id(), std::vector<Token>{Vocabulary::kAnsOpen, s.tokens()[0],
                                                               Vocabulary::kAnsClose});
    }
    if (s.source() == SegmentSource::kSystem) late.AppendSystem(s.tokens());
  }
  late.AppendCore({close, ack});
  out.push_back({"late-reversal", std::move(late)});
  return out;
}

Trajectory WellFormedTrajectory(const Scenario& scenario, const std::string& action_type,
                                std::size_t invocations, Token answer) {
  const Vocabulary& v = scenario.vocab();
  Trajectory t;
  for (std::size_t i = 0; i < invocations; ++i) {
    t.AppendCore({Vocabulary::kActionOpen, v.Get(action_type), v.Get("query"),
                  Vocabulary::kActionClose});
    const std::vector<Token> raw{Vocabulary::kNoise, Vocabulary::kAnsOpen, answer,
                                 Vocabulary::kAnsClose};
    t.InsertAgentResponse("agent-" + std::to_string(i), raw);
    t.AppendSystem({Vocabulary::kAgentOk});
  }
  t.AppendCore({answer});
  t.FinishAnswered(answer);
  return t;
}

HackingReport EnumerateRewardHacking(const Scenario& scenario, std::size_t max_steps,
                                     const RewardWeights& weights) {
  struct Scored {
    RewardVector v;
    double scalar;
  };
  const Vocabulary& vocab = scenario.vocab();
  const auto disorder = IndicatorDisorderFixtures(scenario);
  const std::vector<std::optional<FailureKind>> failures = {
      std::nullopt, FailureKind::kIndicatorDisorder, FailureKind::kNoAgentForAction,
      FailureKind::kMalformedAgentResponse, FailureKind::kTruncated};

  HackingReport report;
  const double bound =
      weights.lambda_acc + weights.lambda_eff + weights.lambda_qos + weights.lambda_exp;
  for (std::size_t cls = 0; cls < scenario.generator().classes.size(); ++cls) {
    const TaskSpec task = MakeTask(scenario.generator(), vocab, cls, cls);
    const double d = task.sla_deadline_ms;
    const std::vector<double> latencies = {0.0, 0.5 * d, d, 1.25 * d, 1.5 * d, 2.0 * d, 3.0 * d};

    std::vector<Token> answers;
    for (std::uint32_t id = 0; id < vocab.size(); ++id) {
      const Token t{id};
      if (!vocab.IsControl(t)) answers.push_back(t);
    }

    std::vector<Scored> correct;
    std::vector<Scored> incorrect;
    for (Token answer : answers) {
      for (const auto& failure : failures) {
        for (std::size_t inv = 0; inv <= max_steps; ++inv) {
          for (double latency : latencies) {
            for (std::uint64_t visits = 0; visits < 4; ++visits) {
              EpisodeOutcome o;
              o.final_answer = answer;
              o.invocation_count = inv;
              o.total_latency_ms = latency;
              o.sla_met = latency <= d;
              if (failure) o.failure = FailureReport{*failure, 0, "fixture"};
              const Trajectory& traj =
                  failure == FailureKind::kIndicatorDisorder
                      ? disorder[inv % disorder.size()].trajectory
                      : WellFormedTrajectory(scenario, "network_analysis", inv, answer);
              NoveltyLedger ledger;
              const std::vector<std::string> sig(inv, "network_analysis");
              for (std::uint64_t k = 0; k < visits; ++k) ledger.Visit(sig);

              RewardVector v;
              v.accuracy = AccuracyReward(o, task);
              v.format = FormatReward(traj, vocab);
              v.efficiency = EfficiencyReward(o, max_steps);
              v.qos = QosReward(o, task);
              v.exploration = ExplorationReward(ledger, sig);
              const Scored s{v, Scalarize(v, weights)};
              ++report.outcomes;
              if (v.accuracy == 1.0 && v.format == 1.0) correct.push_back(s);
              if (v.accuracy == 0.0) {
                incorrect.push_back(s);
                if (!(s.scalar < bound)) ++report.bound_violations;
              }
            }
          }
        }
      }
    }
    for (const Scored& bad : incorrect) {
      for (const Scored& good : correct) {
        if (std::tie(bad.v.efficiency, bad.v.qos, bad.v.exploration) !=
            std::tie(good.v.efficiency, good.v.qos, good.v.exploration)) {
          continue;
        }
        ++report.pairs;
        if (!(bad.scalar < good.scalar)) ++report.violations;
      }
    }
  }
  return report;
}

}  // namespace netcollab::testing
