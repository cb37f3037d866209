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

#include "support/random_registry.hpp"

#include <algorithm>

#include "netcollab/error.hpp"
#include "support/oracles.hpp"

namespace netcollab::testing {

namespace {

const std::vector<std::string> kActions = {"network_analysis", "protocol_query", "slicing_audit"};

double Grid(Rng& rng, double lo, double step, int n) {
  return lo + step * static_cast<double>(static_cast<int>(rng.Uniform() * n));
}

std::vector<DiscoveredAgent> RandomCards(Rng& rng, bool grid) {
  const auto n = 1 + static_cast<std::size_t>(rng.Uniform() * 8.0);
  std::vector<DiscoveredAgent> cards;
  std::vector<std::string> ids;
  while (cards.size() < n) {
    std::string id(1, static_cast<char>('a' + static_cast<int>(rng.Uniform() * 12.0)));
    id += std::to_string(static_cast<int>(rng.Uniform() * 3.0));
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) continue;
    ids.push_back(id);
    DiscoveredAgent a;
    a.card.card_id = id;
    // Only the first two action types are ever supported.
    a.card.supported_actions.insert(kActions[rng.Bernoulli(0.5) ? 0 : 1]);
    if (rng.Bernoulli(0.3)) a.card.supported_actions.insert(kActions[1]);
    a.card.cost = grid ? Grid(rng, 0.0, 1.0, 3) : rng.Uniform(0.0, 5.0);
    if (grid) {
      a.metrics.load = Grid(rng, 0.0, 0.25, 5);
      a.metrics.historical_accuracy = Grid(rng, 0.5, 0.25, 3);
      // 100 / (100 + latency) is 1, 1/2 or 1/4: every grid score is exact.
      const double latencies[] = {0.0, 100.0, 300.0};
      a.metrics.avg_latency_ms = latencies[static_cast<int>(rng.Uniform() * 3.0)];
    } else {
      a.metrics.load = rng.Uniform();
      a.metrics.historical_accuracy = rng.Uniform();
      a.metrics.avg_latency_ms = rng.Uniform(0.0, 400.0);
    }
    a.metrics.throughput_rps = rng.Uniform(0.0, 50.0);
    cards.push_back(a);
  }
  return cards;
}

Registry Build(const std::vector<DiscoveredAgent>& cards) {
  Registry r;
  for (const auto& a : cards) r.RegisterCard(a.card, a.metrics);
  return r;
}

RoutingWeights RandomWeights(Rng& rng, bool grid) {
  RoutingWeights w;
  w.w_load = grid ? Grid(rng, 0.0, 0.5, 4) : rng.Uniform(0.0, 2.0);
  w.w_accuracy = grid ? Grid(rng, 0.0, 0.5, 4) : rng.Uniform(0.0, 2.0);
  w.w_latency = grid ? Grid(rng, 0.5, 0.5, 3) : rng.Uniform(0.1, 2.0);
  w.latency_ref_ms = grid ? 100.0 : rng.Uniform(10.0, 300.0);
  w.w_cost = rng.Bernoulli(0.5) ? 0.0 : (grid ? 0.5 : rng.Uniform(0.0, 1.0));
  return w;
}

RoutingWeights Scaled(RoutingWeights w, double c) {
  w.w_load *= c;
  w.w_accuracy *= c;
  w.w_latency *= c;
  w.w_cost *= c;
  return w;
}

}  // namespace

RouterPropertyReport CheckRouterProperties(std::size_t count, std::uint64_t seed) {
  RouterPropertyReport rep;
  Rng rng(seed, {7});
  for (std::size_t i = 0; i < count; ++i) {
    const bool grid = i % 2 == 0;
    std::vector<DiscoveredAgent> cards = RandomCards(rng, grid);
    const RoutingWeights w = RandomWeights(rng, grid);
    const Registry reg = Build(cards);
    std::vector<DiscoveredAgent> reversed(cards.rbegin(), cards.rend());
    const Registry reg_rev = Build(reversed);
    ++rep.registries;

    for (const std::string action : {kActions[0], kActions[1]}) {
      const std::string expected = oracle::ArgmaxCard(cards, action, w);
      if (expected.empty()) continue;
      std::size_t best_count = 0;
      double best = -1e300;
      for (const auto& c : cards) {
        if (!c.card.supported_actions.count(action)) continue;
        const double s = ScoreCard(c.card, c.metrics, w);
        if (s > best) {
          best = s;
          best_count = 1;
        } else if (s == best) {
          ++best_count;
        }
      }
      if (best_count > 1) ++rep.tie_cases;
      const std::string got = Route(action, reg, w);
      if (got != expected || Route(action, reg_rev, w) != got || Route(action, reg, w) != got) {
        ++rep.tie_failures;
      }
      const std::vector<double> scales =
          grid ? std::vector<double>{0.25, 0.5, 2.0, 8.0}
               : std::vector<double>{rng.Uniform(0.1, 1.0), rng.Uniform(1.0, 10.0)};
      for (double c : scales) {
        if (Route(action, reg, Scaled(w, c)) != got) ++rep.scaling_failures;
      }
    }
    try {
      Route(kActions[2], reg, w);
      ++rep.missing_failures;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoAgentForAction) ++rep.missing_failures;
    }
  }
  return rep;
}

}  // namespace netcollab::testing
