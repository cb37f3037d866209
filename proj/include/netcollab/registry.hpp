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

#ifndef NETCOLLAB_REGISTRY_HPP_
#define NETCOLLAB_REGISTRY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace netcollab {

// Unified agent card: identity, capabilities and invocation locator,
// independent of the protocol the agent was announced through.
struct AgentCard {
  std::string card_id;
  std::string protocol_tag = "native";
  std::set<std::string> supported_actions;
  std::string endpoint;
  double cost = 0.0;

  bool Supports(std::string_view action) const {
    return supported_actions.find(std::string(action)) != supported_actions.end();
  }

  friend bool operator==(const AgentCard&, const AgentCard&) = default;
};

struct AgentMetrics {
  double load = 0.0;                 // [0, 1]
  double historical_accuracy = 1.0;  // [0, 1]
  double avg_latency_ms = 0.0;
  double throughput_rps = 0.0;
  std::uint64_t sample_count = 0;

  friend bool operator==(const AgentMetrics&, const AgentMetrics&) = default;
};

// Throws InvalidArgument when a field is out of range or non-finite.
void ValidateMetrics(const AgentMetrics& m);

struct MetricObservation {
  double latency_ms = 0.0;
  bool success = false;
  double load_now = 0.0;
};

struct DiscoveredAgent {
  AgentCard card;
  AgentMetrics metrics;
};

// Protocol-specific announcement before adaptation.
struct RawDescriptor {
  std::string protocol_tag;
  std::map<std::string, std::string> attributes;
};

// Field names one protocol uses for the unified card fields. Only `id` and
// `actions` are required; a missing endpoint maps to "" and missing cost to 0.
struct AdapterFields {
  std::string id;
  std::string actions;
  std::string endpoint;
  std::string cost;
};

// Key-renaming adapters keyed by protocol tag. The default set covers
// "native", "a2a", "acp" and "anp".
class DescriptorAdapters {
 public:
  DescriptorAdapters();

  void Register(std::string protocol_tag, AdapterFields fields);
  bool Has(std::string_view protocol_tag) const;

  // Actions are a comma-separated list; whitespace around entries is trimmed.
  // Errors: UnknownProtocol, MissingAttribute(name), EmptyActions, and
  // InvalidArgument for an unparseable or negative cost.
  AgentCard Adapt(const RawDescriptor& raw) const;

 private:
  std::map<std::string, AdapterFields, std::less<>> adapters_;
};

// Adapts with the default adapter set.
AgentCard AdaptDescriptor(const RawDescriptor& raw);

// Protocol-agnostic agent registry.
//
// Reads take a shared lock and mutations an exclusive one, so a reader sees
// either the state before or after any mutation.
class Registry {
 public:
  static constexpr double kDefaultEwmaAlpha = 0.3;

  explicit Registry(double ewma_alpha = kDefaultEwmaAlpha);
  Registry(const Registry& other);
  Registry& operator=(const Registry& other);

  // Errors: DuplicateId, EmptyActions, InvalidArgument.
  std::string RegisterCard(AgentCard card, AgentMetrics initial_metrics);

  // Cards supporting `action_type`, ascending by card_id.
  std::vector<DiscoveredAgent> Discover(std::string_view action_type) const;

  // Exponentially weighted update of latency and accuracy; load is replaced.
  // The first observation overwrites the configured prior. Error: UnknownCard.
  AgentMetrics UpdateMetrics(const std::string& card_id, const MetricObservation& obs);

  // Error: UnknownCard.
  AgentCard Deregister(const std::string& card_id);

  std::optional<DiscoveredAgent> Find(const std::string& card_id) const;
  std::vector<std::string> CardIds() const;
  std::size_t size() const;
  double ewma_alpha() const { return alpha_; }

 private:
  double alpha_;
  mutable std::shared_mutex mu_;
  std::map<std::string, DiscoveredAgent> entries_;
};

}  // namespace netcollab

#endif  // NETCOLLAB_REGISTRY_HPP_
