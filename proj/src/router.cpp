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

#include "netcollab/router.hpp"

#include <cmath>

#include "netcollab/error.hpp"

namespace netcollab {

void ValidateWeights(const RoutingWeights& w) {
  for (double x : {w.w_load, w.w_accuracy, w.w_latency, w.w_cost}) {
    if (!std::isfinite(x) || x < 0.0) {
      Fail(ErrorCode::kInvalidArgument, "routing weights must be finite and >= 0");
    }
  }
  if (!(w.Sum() > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "w_load + w_accuracy + w_latency must be > 0");
  }
  if (!std::isfinite(w.latency_ref_ms) || !(w.latency_ref_ms > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "latency_ref_ms must be > 0");
  }
}

double Score(const AgentMetrics& metrics, const RoutingWeights& weights) {
  const double latency_term =
      weights.latency_ref_ms / (weights.latency_ref_ms + metrics.avg_latency_ms);
  return weights.w_load * (1.0 - metrics.load) +
         weights.w_accuracy * metrics.historical_accuracy + weights.w_latency * latency_term;
}

double ScoreCard(const AgentCard& card, const AgentMetrics& metrics,
                 const RoutingWeights& weights) {
  const double base = Score(metrics, weights);
  return weights.w_cost > 0.0 ? base - weights.w_cost * card.cost : base;
}

std::string Route(std::string_view action_type, const Registry& registry,
                  const RoutingWeights& weights) {
  const auto candidates = registry.Discover(action_type);
  if (candidates.empty()) {
    Fail(ErrorCode::kNoAgentForAction, "NoAgentForAction(" + std::string(action_type) + ")");
  }
  // Candidates arrive sorted by card_id, so a strict comparison keeps the
  // smallest id on ties.
  const DiscoveredAgent* best = &candidates.front();
  double best_score = ScoreCard(best->card, best->metrics, weights);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double s = ScoreCard(candidates[i].card, candidates[i].metrics, weights);
    if (s > best_score) {
      best = &candidates[i];
      best_score = s;
    }
  }
  return best->card.card_id;
}

RoutingWeights AdaptWeights(const RoutingWeights& weights, const RoutingFeedback& feedback,
                            double step_size) {
  if (!(step_size > 0.0 && step_size < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "step_size must lie in (0,1)");
  }
  if (feedback.sla_met) return weights;
  const double previous_sum = weights.Sum();
  RoutingWeights out = weights;
  out.w_latency *= 1.0 + step_size;
  const double scale = previous_sum / out.Sum();
  out.w_load *= scale;
  out.w_accuracy *= scale;
  out.w_latency *= scale;
  return out;
}

}  // namespace netcollab
