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

#ifndef NETCOLLAB_REWARDS_HPP_
#define NETCOLLAB_REWARDS_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "netcollab/orchestrator.hpp"
#include "netcollab/simenv.hpp"
#include "netcollab/trajectory.hpp"

namespace netcollab {

struct RewardVector {
  double accuracy = 0.0;     // {0, 1}
  double format = 0.0;       // {0, 1}
  double efficiency = 0.0;   // [0, 1]
  double qos = 0.0;          // [-1, 1]
  double exploration = 0.0;  // [0, 1]

  RewardVector operator+(const RewardVector& o) const {
    return {accuracy + o.accuracy, format + o.format, efficiency + o.efficiency, qos + o.qos,
            exploration + o.exploration};
  }
  friend bool operator==(const RewardVector&, const RewardVector&) = default;
};

// Scalarization weights. Construction through Validated() enforces
// lambda_fmt < lambda_acc, lambda_acc > 0 and nonnegativity, so a policy can
// never trade correctness for formatting.
struct RewardWeights {
  double lambda_acc = 1.0;
  double lambda_fmt = 0.2;
  double lambda_eff = 0.2;
  double lambda_qos = 0.2;
  double lambda_exp = 0.1;

  // Throws InvalidWeights naming the violated constraint.
  static RewardWeights Validated(double acc, double fmt, double eff, double qos, double exp);
  void Validate() const;
};

double AccuracyReward(const EpisodeOutcome& outcome, const TaskSpec& task);
double FormatReward(const Trajectory& traj, const Vocabulary& vocab);
double EfficiencyReward(const EpisodeOutcome& outcome, std::size_t max_steps);
double QosReward(const EpisodeOutcome& outcome, const TaskSpec& task);

// Visit counts per delegation signature. Increments are serialized.
class NoveltyLedger {
 public:
  NoveltyLedger() = default;
  NoveltyLedger(const NoveltyLedger& other);
  NoveltyLedger& operator=(const NoveltyLedger& other);

  // 1 / sqrt(1 + prior visits), then records the visit.
  double Visit(const std::vector<std::string>& signature);
  std::uint64_t Count(const std::vector<std::string>& signature) const;
  std::map<std::vector<std::string>, std::uint64_t> Snapshot() const;

 private:
  mutable std::mutex mu_;
  std::map<std::vector<std::string>, std::uint64_t> counts_;
};

double ExplorationReward(NoveltyLedger& ledger, const std::vector<std::string>& signature);

double Scalarize(const RewardVector& v, const RewardWeights& w);

// All five components for a finished episode; updates the ledger.
RewardVector ComputeRewards(const EpisodeResult& episode, const TaskSpec& task,
                            const Vocabulary& vocab, std::size_t max_steps,
                            NoveltyLedger& ledger);

}  // namespace netcollab

#endif  // NETCOLLAB_REWARDS_HPP_
