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

#include <cmath>

#include <gtest/gtest.h>

#include "netcollab/commands.hpp"
#include "netcollab/error.hpp"
#include "netcollab/trainer.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace netcollab {
namespace {

TEST(GroupAdvantage, AlternatingRewards) {
  const std::vector<double> r{1, 0, 1, 0};
  const auto a = GroupAdvantage(r);
  const std::vector<double> want{1, -1, 1, -1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a[i], want[i], 1e-6);
}

TEST(GroupAdvantage, AllEqualIsZero) {
  const std::vector<double> r{0.7, 0.7, 0.7};
  for (double a : GroupAdvantage(r)) EXPECT_EQ(a, 0.0);
}

TEST(GroupAdvantage, ZeroMeanAndOracleAgreement) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> r(2 + trial % 9);
    for (double& x : r) x = rng.Uniform(-2.0, 2.0);
    const auto a = GroupAdvantage(r);
    EXPECT_NEAR(oracle::Mean(a), 0.0, 1e-9);
    const double m = oracle::Mean(r), s = oracle::PopulationStd(r);
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_NEAR(a[i], (r[i] - m) / (s + 1e-8), 1e-12);
  }
}

std::vector<StepRecord> Steps(std::vector<double> entropies) {
  std::vector<StepRecord> out;
  for (double h : entropies) out.push_back({{}, 0, 0.0, h});
  return out;
}

TEST(EntropyControl, ZeroBonusLeavesAdvantage) {
  ExplorationConfig c = ExplorationConfig::Defaults(5);
  c.entropy_bonus = 0.0;
  const auto r = EntropyControl(Steps({0.1, 0.9, 1.4}), 0.3, c);
  for (double a : r.corrected) EXPECT_EQ(a, 0.3);
}

TEST(EntropyControl, UniformEntropiesNoCorrection) {
  const auto r = EntropyControl(Steps({0.5, 0.5, 0.5}), -0.4, ExplorationConfig::Defaults(5));
  for (double a : r.corrected) EXPECT_EQ(a, -0.4);
}

TEST(EntropyControl, AboveMeanByOne) {
  ExplorationConfig c = ExplorationConfig::Defaults(5);
  c.entropy_bonus = 0.1;
  const auto r = EntropyControl(Steps({0.0, 2.0}), 0.5, c);
  EXPECT_NEAR(r.corrected[1], 0.6, 1e-12);
  EXPECT_NEAR(r.corrected[0], 0.4, 1e-12);
}

TEST(EntropyControl, TriggersAboveHighThreshold) {
  const ExplorationConfig c = ExplorationConfig::Defaults(5);
  EXPECT_FALSE(EntropyControl(Steps({c.tau_high}), 0.0, c).triggered);
  EXPECT_TRUE(EntropyControl(Steps({0.0, c.tau_high + 1e-9}), 0.0, c).triggered);
}

class UpdateTest : public ::testing::Test {
 protected:
  UpdateTest()
      : scenario_(PresetCaseStudy()),
        registry_(scenario_.MakeRegistry()),
        encoder_{scenario_.generator().FeatureDim(), 4} {
    ctx_.scenario = &scenario_;
    ctx_.registry = &registry_;
  }

  RolloutGroup Group(const Policy& p, std::size_t cls, std::uint64_t seed) {
    NoveltyLedger ledger;
    return RollOutGroup(MakeTask(scenario_.generator(), scenario_.vocab(), cls), p, 8, ctx_,
                        seed, ledger);
  }
  static StepAdvantages Constant(const std::vector<RolloutGroup>& groups, double a) {
    StepAdvantages out;
    for (const auto& g : groups) {
      auto& ge = out.emplace_back();
      for (const auto& ep : g.episodes) ge.emplace_back(ep.steps.size(), a);
    }
    return out;
  }

  Scenario scenario_;
  Registry registry_;
  ObservationEncoder encoder_;
  RolloutContext ctx_;
};

TEST_F(UpdateTest, DeterministicPolicyGivesIdenticalEpisodes) {
  ScenarioConfig cfg = scenario_.config();
  for (auto& a : cfg.agents) {
    a.latency_jitter_ms = 0.0;
    for (auto& [k, p] : a.success_prob) p = 1.0;
  }
  ctx_.env_factory = [cfg] { return SimEnv(cfg.agents); };
  const Policy p = Policy::Forced(encoder_, 5, scenario_.actions().Index("network_analysis"));
  const RolloutGroup g = Group(p, 1, 3);
  for (const auto& ep : g.episodes) {
    EXPECT_EQ(ep.trajectory.segments(), g.episodes[0].trajectory.segments());
  }
}

TEST_F(UpdateTest, SeedStreamsReproduce) {
  const Policy p(encoder_, 5);
  const RolloutGroup a = Group(p, 1, 3);
  const RolloutGroup b = Group(p, 1, 3);
  EXPECT_EQ(a.scalar_rewards, b.scalar_rewards);
  bool differs = false;
  for (const auto& ep : a.episodes) {
    differs |= !(ep.trajectory.segments() == a.episodes[0].trajectory.segments());
  }
  EXPECT_TRUE(differs);
}

TEST_F(UpdateTest, GroupOfOneRejected) {
  NoveltyLedger ledger;
  EXPECT_THROW(RollOutGroup(MakeTask(scenario_.generator(), scenario_.vocab(), 0),
                            Policy(encoder_, 5), 1, ctx_, 1, ledger),
               Error);
}

TEST_F(UpdateTest, ZeroAdvantagesLeaveParams) {
  Rng rng(1);
  const Policy p = testing::RandomPolicy(encoder_, 5, rng, 1.0);
  const std::vector<RolloutGroup> groups{Group(p, 1, 5)};
  EXPECT_EQ(MaskedPolicyUpdate(p, groups, Constant(groups, 0.0), 0.05), p.params());
}

TEST_F(UpdateTest, SingleStepEqualsScaledGradient) {
  Rng rng(2);
  const Policy p = testing::RandomPolicy(encoder_, 5, rng, 1.0);
  RolloutGroup g = Group(p, 1, 5);
  g.episodes.resize(1);
  g.episodes[0].steps.resize(1);
  const std::vector<RolloutGroup> groups{g};
  const PolicyParams next = MaskedPolicyUpdate(p, groups, Constant(groups, 1.0), 0.05);
  const auto& s = g.episodes[0].steps[0];
  PolicyParams want = p.params();
  want.AddScaled(p.LogProbAndGrad(s.obs, s.action_index).grad, 0.05);
  for (std::size_t k = 0; k < want.values().size(); ++k) {
    EXPECT_NEAR(next.values()[k], want.values()[k], 1e-15);
  }
}

TEST_F(UpdateTest, AgentContentDoesNotMatter) {
  Rng rng(3);
  const Policy p = testing::RandomPolicy(encoder_, 5, rng, 0.5);
  std::vector<RolloutGroup> groups{Group(p, 1, 7), Group(p, 2, 8)};
  StepAdvantages adv;
  for (const auto& g : groups) {
    const auto a = GroupAdvantage(g.scalar_rewards);
    auto& ge = adv.emplace_back();
    for (std::size_t e = 0; e < g.episodes.size(); ++e) {
      ge.push_back(EntropyControl(g.episodes[e].steps, a[e], ExplorationConfig::Defaults(5)).corrected);
    }
  }
  const PolicyParams before = MaskedPolicyUpdate(p, groups, adv, 0.05);
  std::size_t mutated = 0;
  for (auto& g : groups) {
    for (auto& ep : g.episodes) {
      for (std::size_t i = 0; i < ep.trajectory.segments().size(); ++i) {
        if (ep.trajectory.segments()[i].source() != SegmentSource::kAgent) continue;
        ep.trajectory.mutable_segment(i).ReplaceAgentTokens({Vocabulary::kNoise, Vocabulary::kWrong});
        ++mutated;
      }
    }
  }
  ASSERT_GT(mutated, 0u);
  EXPECT_EQ(MaskedPolicyUpdate(p, groups, adv, 0.05), before);
}

TEST(TrainerConfig, Rejections) {
  TrainerConfig c;
  c.exploration = ExplorationConfig::Defaults(5);
  EXPECT_NO_THROW(c.Validate());
  TrainerConfig g1 = c;
  g1.group_size = 1;
  EXPECT_THROW(g1.Validate(), Error);
  TrainerConfig it0 = c;
  it0.iterations = 0;
  EXPECT_THROW(it0.Validate(), Error);
}

TEST(Train, ZeroLearningRateKeepsParams) {
  const Scenario s(PresetCaseStudy());
  TrainerConfig c;
  c.exploration = ExplorationConfig::Defaults(5);
  c.learning_rate = 0.0;
  c.iterations = 20;
  Rng rng(4);
  const Policy init = testing::RandomPolicy({s.generator().FeatureDim(), 4}, 5, rng, 1.0);
  const TrainingResult r = Train(s, c, init);
  EXPECT_EQ(r.policy.params(), init.params());
  EXPECT_EQ(r.report.iterations.size(), 20u);
}

TEST(Train, CollapseDetectorFiresForForcedPolicy) {
  const Scenario s(PresetCaseStudy());
  TrainerConfig c;
  c.exploration = ExplorationConfig::Defaults(5);
  c.learning_rate = 0.0;
  c.iterations = 5;
  const Policy forced = Policy::Forced({s.generator().FeatureDim(), 4}, 5, 0);
  EXPECT_EQ(Train(s, c, forced).report.collapse_warnings, 5u);
  const Policy uniform({s.generator().FeatureDim(), 4}, 5);
  EXPECT_EQ(Train(s, c, uniform).report.collapse_warnings, 0u);
}

TEST(Train, CsvShape) {
  const Scenario s(PresetCaseStudy());
  TrainerConfig c;
  c.exploration = ExplorationConfig::Defaults(5);
  c.iterations = 10;
  const auto csv = Train(s, c, Policy({s.generator().FeatureDim(), 4}, 5)).report.ToCsv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_EQ(csv.rfind("iteration,mean_reward,success_rate,mean_entropy,triggers\n", 0), 0u);
}

TEST(Train, CheckpointCadence) {
  const Scenario s(PresetCaseStudy());
  TrainerConfig c;
  c.exploration = ExplorationConfig::Defaults(5);
  c.iterations = 10;
  c.checkpoint_every = 4;
  std::vector<std::size_t> seen;
  Train(s, c, Policy({s.generator().FeatureDim(), 4}, 5),
        [&](std::size_t it, const Policy&) { seen.push_back(it); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{4, 8}));
}

// Warm-up then RL, as in the full pipeline. RL alone from the uniform policy
// settles on direct answers at this horizon.
TEST(Train, TinyConfigMatchesEnumeratedOptimum) {
  const RunConfig rc = testing::TinyConfig();
  Session session(rc);
  session.Sft(session.GenerateDemonstrations(rc.sft.demos));
  session.Train();
  const Scenario& s = session.scenario();
  const oracle::Optimum opt = oracle::EnumerateOptimum(
      rc.scenario, rc.trainer.max_steps, rc.trainer.reward_weights, rc.trainer.routing);
  const double agreement =
      oracle::OptimalAgreement(opt, [&](std::size_t cls, const oracle::ObsKey& k) {
        const TaskSpec t = MakeTask(s.generator(), s.vocab(), cls);
        return session.policy().Greedy(Observation{t.features, k.step, k.outcome});
      });
  EXPECT_GE(agreement, 0.95);
}

}  // namespace
}  // namespace netcollab
