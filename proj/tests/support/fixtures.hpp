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

#ifndef NETCOLLAB_TESTS_SUPPORT_FIXTURES_HPP_
#define NETCOLLAB_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "netcollab/config.hpp"
#include "netcollab/orchestrator.hpp"
#include "netcollab/rewards.hpp"
#include "netcollab/scenario.hpp"

namespace netcollab::testing {

// Case-study preset with the default trainer settings.
RunConfig CaseStudyConfig();

// Case-study preset cut down to two decision steps.
RunConfig TinyConfig();

// Random parameters in [-scale, scale].
Policy RandomPolicy(const ObservationEncoder& enc, std::size_t num_actions, Rng& rng,
                    double scale);

// Random observation for the encoder (one-hot class features plus a random
// difficulty bit, random step and outcome).
Observation RandomObservation(const ObservationEncoder& enc, Rng& rng);

struct LabeledTrajectory {
  std::string label;
  Trajectory trajectory;
};

// Trajectories whose core segments misuse the action indicators: reversed,
// nested, unclosed, stray closing tag, empty span, answer tag in core text,
// span not starting with an action type.
std::vector<LabeledTrajectory> IndicatorDisorderFixtures(const Scenario& scenario);

// Well-formed trajectory with `invocations` delegations of `action_type`
// followed by a final core answer.
Trajectory WellFormedTrajectory(const Scenario& scenario, const std::string& action_type,
                                std::size_t invocations, Token answer);

struct HackingReport {
  std::size_t outcomes = 0;          // terminal outcomes enumerated
  std::size_t pairs = 0;             // (incorrect, correct) pairs compared
  std::size_t violations = 0;        // incorrect outscoring correct
  std::size_t bound_violations = 0;  // incorrect >= acc + eff + qos + exp weights
};

// Enumerates terminal outcomes (answer token, failure kind, invocation count,
// latency, novelty count) for every task class, scores them with the reward
// functions and compares every incorrect outcome against every correct
// well-formed outcome sharing its efficiency, QoS and exploration values.
HackingReport EnumerateRewardHacking(const Scenario& scenario, std::size_t max_steps,
                                     const RewardWeights& weights);

}  // namespace netcollab::testing

#endif  // NETCOLLAB_TESTS_SUPPORT_FIXTURES_HPP_
