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

#include "netcollab/rewards.hpp"

#include <algorithm>
#include <cmath>

#include "netcollab/error.hpp"

namespace netcollab {

RewardWeights RewardWeights::Validated(double acc, double fmt, double eff, double qos,
                                       double exp) {
  RewardWeights w{acc, fmt, eff, qos, exp};
  w.Validate();
  return w;
}

void RewardWeights::Validate() const {
  for (double x : {lambda_acc, lambda_fmt, lambda_eff, lambda_qos, lambda_exp}) {
    if (!std::isfinite(x) || x < 0.0) {
      Fail(ErrorCode::kInvalidWeights, "InvalidWeights: reward weights must be finite and >= 0");
    }
  }
  if (!(lambda_acc > 0.0)) Fail(ErrorCode::kInvalidWeights, "InvalidWeights: lambda_acc must be > 0");
  if (!(lambda_fmt < lambda_acc)) {
    Fail(ErrorCode::kInvalidWeights, "InvalidWeights: lambda_fmt must be < lambda_acc");
  }
}

double AccuracyReward(const EpisodeOutcome& outcome, const TaskSpec& task) {
  return outcome.final_answer && *outcome.final_answer == task.ground_truth && !outcome.failure
             ? 1.0
             : 0.0;
}

double FormatReward(const Trajectory& traj, const Vocabulary& vocab) {
  return Validate(traj, vocab) ? 0.0 : 1.0;
}

double EfficiencyReward(const EpisodeOutcome& outcome, std::size_t max_steps) {
  if (max_steps < 1) Fail(ErrorCode::kInvalidArgument, "max_steps must be >= 1");
  const double r = 1.0 - static_cast<double>(outcome.invocation_count) / static_cast<double>(max_steps);
  return std::clamp(r, 0.0, 1.0);
}

double QosReward(const EpisodeOutcome& outcome, const TaskSpec& task) {
  const double deadline = task.sla_deadline_ms;
  if (!(deadline > 0.0)) Fail(ErrorCode::kInvalidArgument, "sla_deadline_ms must be > 0");
  const double latency = outcome.total_latency_ms;
  if (latency <= deadline) return 1.0;
  return std::max(-1.0, 1.0 - 2.0 * (latency - deadline) / deadline);
}

NoveltyLedger::NoveltyLedger(const NoveltyLedger& other) {
  std::lock_guard lock(other.mu_);
  counts_ = other.counts_;
}

NoveltyLedger& NoveltyLedger::operator=(const NoveltyLedger& other) {
  if (this == &other) return *this;
  auto copy = other.Snapshot();
  std::lock_guard lock(mu_);
  counts_ = std::move(copy);
  return *this;
}

double NoveltyLedger::Visit(const std::vector<std::string>& signature) {
  std::lock_guard lock(mu_);
  std::uint64_t& n = counts_[signature];
  const double bonus = 1.0 / std::sqrt(1.0 + static_cast<double>(n));
  ++n;
  return bonus;
}

std::uint64_t NoveltyLedger::Count(const std::vector<std::string>& signature) const {
  std::lock_guard lock(mu_);
  auto it = counts_.find(signature);
  return it == counts_.end() ? 0 : it->second;
}

std::map<std::vector<std::string>, std::uint64_t> NoveltyLedger::Snapshot() const {
  std::lock_guard lock(mu_);
  return counts_;
}

double ExplorationReward(NoveltyLedger& ledger, const std::vector<std::string>& signature) {
  return ledger.Visit(signature);
}

double Scalarize(const RewardVector& v, const RewardWeights& w) {
  return w.lambda_acc * v.accuracy + w.lambda_fmt * v.format + w.lambda_eff * v.efficiency +
         w.lambda_qos * v.qos + w.lambda_exp * v.exploration;
}

RewardVector ComputeRewards(const EpisodeResult& episode, const TaskSpec& task,
                            const Vocabulary& vocab, std::size_t max_steps,
                            NoveltyLedger& ledger) {
  RewardVector v;
  v.accuracy = AccuracyReward(episode.outcome, task);
  v.format = FormatReward(episode.trajectory, vocab);
  v.efficiency = EfficiencyReward(episode.outcome, max_steps);
  v.qos = QosReward(episode.outcome, task);
  v.exploration = ExplorationReward(ledger, episode.outcome.delegation_signature);
  return v;
}

}  // namespace netcollab
