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

#ifndef NETCOLLAB_ROUTER_HPP_
#define NETCOLLAB_ROUTER_HPP_

#include <string>
#include <string_view>

#include "netcollab/registry.hpp"

namespace netcollab {

struct RoutingWeights {
  double w_load = 1.0;
  double w_accuracy = 1.0;
  double w_latency = 1.0;
  double latency_ref_ms = 100.0;
  // Optional cost penalty; zero keeps cost out of the score.
  double w_cost = 0.0;

  double Sum() const { return w_load + w_accuracy + w_latency; }

  friend bool operator==(const RoutingWeights&, const RoutingWeights&) = default;
};

// Throws InvalidArgument unless all weights are finite and nonnegative, the
// three metric weights have a positive sum, and latency_ref_ms > 0.
void ValidateWeights(const RoutingWeights& w);

// w_load (1 - load) + w_accuracy accuracy + w_latency ref / (ref + latency).
double Score(const AgentMetrics& metrics, const RoutingWeights& weights);

// Score minus w_cost * cost.
double ScoreCard(const AgentCard& card, const AgentMetrics& metrics, const RoutingWeights& weights);

// Highest-scoring card among those supporting `action_type`; ties go to the
// lexicographically smallest card_id. Error: NoAgentForAction.
std::string Route(std::string_view action_type, const Registry& registry,
                  const RoutingWeights& weights);

struct RoutingFeedback {
  double episode_latency_ms = 0.0;
  bool sla_met = true;
};

// On an SLA violation scales w_latency by (1 + step_size) and rescales the
// three metric weights back to their previous L1 sum. Otherwise returns the
// weights unchanged. step_size must lie in (0, 1).
RoutingWeights AdaptWeights(const RoutingWeights& weights, const RoutingFeedback& feedback,
                            double step_size);

}  // namespace netcollab

#endif  // NETCOLLAB_ROUTER_HPP_
