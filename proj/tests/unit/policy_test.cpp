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
#include <numeric>

#include <gtest/gtest.h>

#include "netcollab/error.hpp"
#include "netcollab/policy.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace netcollab {
namespace {

const ObservationEncoder kEnc{4, 4};
constexpr std::size_t kActions = 5;

Observation Obs(std::size_t cls, std::size_t step, OutcomeFlag flag) {
  Observation o;
  o.features.assign(4, 0.0);
  o.features[cls] = 1.0;
  o.features[3] = cls == 0 ? 0.0 : 1.0;
  o.step_index = step;
  o.last_outcome = flag;
  return o;
}

TEST(Encoder, Layout) {
  const auto x = kEnc.Encode(Obs(1, 2, OutcomeFlag::kAgentFailure));
  ASSERT_EQ(x.size(), kEnc.dim());
  EXPECT_EQ(x, (std::vector<double>{0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_THROW(kEnc.Encode(Obs(1, 4, OutcomeFlag::kNone)), Error);
}

TEST(Policy, ZeroParamsAreUniform) {
  const Policy p(kEnc, kActions);
  for (double q : p.ActionDistribution(Obs(0, 0, OutcomeFlag::kNone))) EXPECT_EQ(q, 0.2);
}

TEST(Policy, RaisingARowRaisesItsProbability) {
  Rng rng(3);
  const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 1.0);
  const Observation o = Obs(2, 1, OutcomeFlag::kAgentSuccess);
  PolicyParams bumped = p.params();
  for (std::size_t c = 0; c < bumped.cols(); ++c) bumped.at(3, c) += 0.5;
  EXPECT_GT(Policy(kEnc, bumped).ActionDistribution(o)[3], p.ActionDistribution(o)[3]);
}

TEST(Policy, DistributionNormalized) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 5.0);
    const auto probs = p.ActionDistribution(testing::RandomObservation(kEnc, rng));
    EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
    for (double q : probs) EXPECT_GT(q, 0.0);
  }
}

TEST(Policy, RejectsBadParams) {
  EXPECT_THROW(Policy(kEnc, PolicyParams(kActions, kEnc.dim() + 1)), Error);
  PolicyParams nan(kActions, kEnc.dim());
  nan.at(0, 0) = std::nan("");
  EXPECT_THROW(Policy(kEnc, nan), Error);
}

TEST(Gradient, MatchesFiniteDifferences) {
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 2.0);
    const Observation o = testing::RandomObservation(kEnc, rng);
    const std::size_t a = rng.Categorical(std::vector<double>(kActions, 1.0));
    const auto lg = p.LogProbAndGrad(o, a);
    EXPECT_NEAR(lg.log_prob, oracle::LogProb(p.params(), o, kEnc.max_steps, a), 1e-12);
    const PolicyParams fd = oracle::FiniteDifferenceGrad(p.params(), o, kEnc.max_steps, a, 1e-5);
    for (std::size_t k = 0; k < fd.values().size(); ++k) {
      EXPECT_NEAR(lg.grad.values()[k], fd.values()[k], 1e-6);
    }
  }
}

TEST(Gradient, VanishesForCertainAction) {
  const Policy p = Policy::Forced(kEnc, kActions, 2);
  const Observation o = Obs(1, 0, OutcomeFlag::kNone);
  ASSERT_GE(p.ActionDistribution(o)[2], 1.0 - 1e-8);
  EXPECT_LE(p.LogProbAndGrad(o, 2).grad.MaxAbs(), 1e-6);
}

TEST(Gradient, OtherRowsAreMinusProbTimesInput) {
  Rng rng(8);
  const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 1.0);
  const Observation o = Obs(2, 3, OutcomeFlag::kAgentFailure);
  const auto probs = p.ActionDistribution(o);
  const auto x = kEnc.Encode(o);
  const auto g = p.LogProbAndGrad(o, 1).grad;
  for (std::size_t r = 0; r < kActions; ++r) {
    if (r == 1) continue;
    for (std::size_t c = 0; c < x.size(); ++c) EXPECT_DOUBLE_EQ(g.at(r, c), -probs[r] * x[c]);
  }
}

TEST(Entropy, Uniform) {
  EXPECT_NEAR(Policy(kEnc, kActions).Entropy(Obs(0, 0, OutcomeFlag::kNone)),
              std::log(double(kActions)), 1e-12);
}

TEST(Entropy, NearDeterministic) {
  EXPECT_LE(Policy::Forced(kEnc, kActions, 0).Entropy(Obs(1, 2, OutcomeFlag::kNone)), 1e-6);
}

TEST(Entropy, BoundedByLogActions) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 3.0);
    const double h = p.Entropy(testing::RandomObservation(kEnc, rng));
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log(double(kActions)) + 1e-12);
  }
}

TEST(Greedy, LowestIndexOnTies) {
  EXPECT_EQ(Policy(kEnc, kActions).Greedy(Obs(0, 0, OutcomeFlag::kNone)), 0u);
}

TEST(Sft, RepeatedSampleProbabilityIncreases) {
  Policy p(kEnc, kActions);
  const std::vector<SftSample> batch{{Obs(1, 0, OutcomeFlag::kNone), 3}};
  double prev = p.MeanDemoProbability(batch);
  for (int i = 0; i < 50; ++i) {
    p = Policy(kEnc, SftUpdate(p, batch, 0.1));
    const double now = p.MeanDemoProbability(batch);
    EXPECT_GT(now, prev);
    prev = now;
  }
}

TEST(Sft, EmptyBatchLeavesParams) {
  Rng rng(1);
  const Policy p = testing::RandomPolicy(kEnc, kActions, rng, 1.0);
  EXPECT_EQ(SftUpdate(p, {}, 0.1), p.params());
  EXPECT_THROW(SftUpdate(p, {}, 0.0), Error);
}

TEST(Sft, LossDecreasesMonotonically) {
  Rng rng(12);
  std::vector<SftSample> batch;
  for (int i = 0; i < 10; ++i) {
    batch.push_back({testing::RandomObservation(kEnc, rng),
                     rng.Categorical(std::vector<double>(kActions, 1.0))});
  }
  Policy p(kEnc, kActions);
  double prev = p.SftLoss(batch);
  for (int i = 0; i < 100; ++i) {
    p = Policy(kEnc, SftUpdate(p, batch, 0.1));
    const double now = p.SftLoss(batch);
    EXPECT_LT(now, prev) << "step " << i;
    prev = now;
  }
}

}  // namespace
}  // namespace netcollab
