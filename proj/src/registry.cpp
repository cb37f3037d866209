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

#include "netcollab/registry.hpp"

#include <cmath>
#include <mutex>

#include "netcollab/error.hpp"

namespace netcollab {

namespace {

bool InUnit(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::set<std::string> SplitActions(std::string_view list) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    std::string item = Trim(list.substr(start, end - start));
    if (!item.empty()) out.insert(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void ValidateMetrics(const AgentMetrics& m) {
  if (!InUnit(m.load)) Fail(ErrorCode::kInvalidArgument, "metrics.load must lie in [0,1]");
  if (!InUnit(m.historical_accuracy)) {
    Fail(ErrorCode::kInvalidArgument, "metrics.historical_accuracy must lie in [0,1]");
  }
  if (!std::isfinite(m.avg_latency_ms) || m.avg_latency_ms < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "metrics.avg_latency_ms must be >= 0");
  }
  if (!std::isfinite(m.throughput_rps) || m.throughput_rps < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "metrics.throughput_rps must be >= 0");
  }
}

DescriptorAdapters::DescriptorAdapters() {
  Register("native", {"id", "actions", "endpoint", "cost"});
  Register("a2a", {"name", "skills", "url", "cost"});
  Register("acp", {"agent_id", "capabilities", "endpoint_uri", "price"});
  Register("anp", {"did", "abilities", "service_endpoint", "cost"});
}

void DescriptorAdapters::Register(std::string protocol_tag, AdapterFields fields) {
  adapters_.insert_or_assign(std::move(protocol_tag), std::move(fields));
}

bool DescriptorAdapters::Has(std::string_view protocol_tag) const {
  return adapters_.find(protocol_tag) != adapters_.end();
}

AgentCard DescriptorAdapters::Adapt(const RawDescriptor& raw) const {
  auto it = adapters_.find(raw.protocol_tag);
  if (it == adapters_.end()) {
    Fail(ErrorCode::kUnknownProtocol, "UnknownProtocol: '" + raw.protocol_tag + "'");
  }
  const AdapterFields& f = it->second;
  auto required = [&](const std::string& key) -> const std::string& {
    auto a = raw.attributes.find(key);
    if (a == raw.attributes.end()) {
      Fail(ErrorCode::kMissingAttribute, "MissingAttribute(" + key + ")");
    }
    return a->second;
  };
  auto optional = [&](const std::string& key) -> std::optional<std::string> {
    auto a = raw.attributes.find(key);
    if (a == raw.attributes.end()) return std::nullopt;
    return a->second;
  };

  AgentCard card;
  card.card_id = Trim(required(f.id));
  if (card.card_id.empty()) {
    Fail(ErrorCode::kMissingAttribute, "MissingAttribute(" + f.id + ")");
  }
  card.protocol_tag = raw.protocol_tag;
  card.supported_actions = SplitActions(required(f.actions));
  if (card.supported_actions.empty()) {
    Fail(ErrorCode::kEmptyActions, "EmptyActions: descriptor '" + card.card_id + "'");
  }
  card.endpoint = optional(f.endpoint).value_or("");
  if (auto cost = optional(f.cost)) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(*cost, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cost->size() || !std::isfinite(value) || value < 0.0) {
      Fail(ErrorCode::kInvalidArgument, "attribute '" + f.cost + "' is not a nonnegative number");
    }
    card.cost = value;
  }
  return card;
}

AgentCard AdaptDescriptor(const RawDescriptor& raw) {
  static const DescriptorAdapters adapters;
  return adapters.Adapt(raw);
}

Registry::Registry(double ewma_alpha) : alpha_(ewma_alpha) {
  if (!(ewma_alpha > 0.0 && ewma_alpha <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "ewma_alpha must lie in (0,1]");
  }
}

Registry::Registry(const Registry& other) {
  std::shared_lock lock(other.mu_);
  alpha_ = other.alpha_;
  entries_ = other.entries_;
}

Registry& Registry::operator=(const Registry& other) {
  if (this == &other) return *this;
  std::map<std::string, DiscoveredAgent> copy;
  double alpha = 0.0;
  {
    std::shared_lock lock(other.mu_);
    copy = other.entries_;
    alpha = other.alpha_;
  }
  std::unique_lock lock(mu_);
  entries_ = std::move(copy);
  alpha_ = alpha;
  return *this;
}

std::string Registry::RegisterCard(AgentCard card, AgentMetrics initial_metrics) {
  if (card.card_id.empty()) Fail(ErrorCode::kInvalidArgument, "card_id must be nonempty");
  if (card.supported_actions.empty()) {
    Fail(ErrorCode::kEmptyActions, "EmptyActions: card '" + card.card_id + "'");
  }
  if (!std::isfinite(card.cost) || card.cost < 0.0) {
    Fail(ErrorCode::kInvalidArgument, "card cost must be >= 0");
  }
  ValidateMetrics(initial_metrics);
  initial_metrics.sample_count = 0;

  std::unique_lock lock(mu_);
  if (entries_.count(card.card_id) != 0) {
    Fail(ErrorCode::kDuplicateId, "DuplicateId: '" + card.card_id + "'");
  }
  std::string id = card.card_id;
  entries_.emplace(id, DiscoveredAgent{std::move(card), initial_metrics});
  return id;
}

std::vector<DiscoveredAgent> Registry::Discover(std::string_view action_type) const {
  std::shared_lock lock(mu_);
  std::vector<DiscoveredAgent> out;
  // std::map iteration is already ascending by card_id.
  for (const auto& [id, entry] : entries_) {
    if (entry.card.Supports(action_type)) out.push_back(entry);
  }
  return out;
}

AgentMetrics Registry::UpdateMetrics(const std::string& card_id, const MetricObservation& obs) {
  if (!std::isfinite(obs.latency_ms) || obs.latency_ms < 0.0 || !InUnit(obs.load_now)) {
    Fail(ErrorCode::kInvalidArgument, "observation out of range");
  }
  std::unique_lock lock(mu_);
  auto it = entries_.find(card_id);
  if (it == entries_.end()) Fail(ErrorCode::kUnknownCard, "UnknownCard: '" + card_id + "'");
  AgentMetrics& m = it->second.metrics;
  const double outcome = obs.success ? 1.0 : 0.0;
  if (m.sample_count == 0) {
    m.avg_latency_ms = obs.latency_ms;
    m.historical_accuracy = outcome;
  } else {
    m.avg_latency_ms = (1.0 - alpha_) * m.avg_latency_ms + alpha_ * obs.latency_ms;
    m.historical_accuracy = (1.0 - alpha_) * m.historical_accuracy + alpha_ * outcome;
  }
  m.load = obs.load_now;
  ++m.sample_count;
  return m;
}

AgentCard Registry::Deregister(const std::string& card_id) {
  std::unique_lock lock(mu_);
  auto it = entries_.find(card_id);
  if (it == entries_.end()) Fail(ErrorCode::kUnknownCard, "UnknownCard: '" + card_id + "'");
  AgentCard card = std::move(it->second.card);
  entries_.erase(it);
  return card;
}

std::optional<DiscoveredAgent> Registry::Find(const std::string& card_id) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find(card_id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Registry::CardIds() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  ids.reserve(entries_.size());
  for (const auto& [id, entry] : entries_) ids.push_back(id);
  return ids;
}

std::size_t Registry::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace netcollab
