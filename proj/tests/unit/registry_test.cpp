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

#include <thread>

#include <gtest/gtest.h>

#include "netcollab/error.hpp"
#include "netcollab/registry.hpp"

namespace netcollab {
namespace {

AgentCard Card(std::string id, std::set<std::string> actions) {
  AgentCard c;
  c.card_id = std::move(id);
  c.supported_actions = std::move(actions);
  return c;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

TEST(Registry, RegisterThenDiscover) {
  Registry r;
  EXPECT_EQ(r.RegisterCard(Card("na-1", {"network_analysis"}), {}), "na-1");
  const auto found = r.Discover("network_analysis");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].card.card_id, "na-1");
}

TEST(Registry, DuplicateIdRejected) {
  Registry r;
  r.RegisterCard(Card("na-1", {"network_analysis"}), {});
  EXPECT_EQ(CodeOf([&] { r.RegisterCard(Card("na-1", {"protocol_query"}), {}); }),
            ErrorCode::kDuplicateId);
}

TEST(Registry, EmptyActionsRejected) {
  Registry r;
  EXPECT_EQ(CodeOf([&] { r.RegisterCard(Card("x", {}), {}); }), ErrorCode::kEmptyActions);
}

TEST(Registry, InvalidMetricsRejected) {
  Registry r;
  AgentMetrics m;
  m.load = 1.5;
  EXPECT_EQ(CodeOf([&] { r.RegisterCard(Card("x", {"a"}), m); }), ErrorCode::kInvalidArgument);
}

TEST(Adapters, NativeDescriptor) {
  const AgentCard c = AdaptDescriptor({"native", {{"id", "pq-1"}, {"actions", "protocol_query"}}});
  EXPECT_EQ(c.card_id, "pq-1");
  EXPECT_EQ(c.supported_actions, std::set<std::string>{"protocol_query"});
  EXPECT_EQ(c.protocol_tag, "native");
}

TEST(Adapters, UnknownProtocol) {
  EXPECT_EQ(CodeOf([] { AdaptDescriptor({"unknown-x", {{"id", "a"}}}); }),
            ErrorCode::kUnknownProtocol);
}

TEST(Adapters, A2aMissingCapabilityField) {
  EXPECT_EQ(CodeOf([] { AdaptDescriptor({"a2a", {{"name", "na-2"}, {"url", "x"}}}); }),
            ErrorCode::kMissingAttribute);
}

TEST(Adapters, EveryProtocolMapsToTheSameCard) {
  const std::vector<RawDescriptor> raws = {
      {"native", {{"id", "c"}, {"actions", "a, b"}, {"endpoint", "e"}, {"cost", "2"}}},
      {"a2a", {{"name", "c"}, {"skills", "a,b"}, {"url", "e"}, {"cost", "2"}}},
      {"acp", {{"agent_id", "c"}, {"capabilities", "b,a"}, {"endpoint_uri", "e"}, {"price", "2"}}},
      {"anp", {{"did", "c"}, {"abilities", "a,b"}, {"service_endpoint", "e"}, {"cost", "2"}}},
  };
  for (const auto& raw : raws) {
    const AgentCard c = AdaptDescriptor(raw);
    EXPECT_EQ(c.card_id, "c") << raw.protocol_tag;
    EXPECT_EQ(c.supported_actions, (std::set<std::string>{"a", "b"})) << raw.protocol_tag;
    EXPECT_EQ(c.endpoint, "e") << raw.protocol_tag;
    EXPECT_EQ(c.cost, 2.0) << raw.protocol_tag;
    EXPECT_EQ(c.protocol_tag, raw.protocol_tag);
  }
}

TEST(Registry, DiscoverEmpty) {
  Registry r;
  EXPECT_TRUE(r.Discover("x").empty());
}

TEST(Registry, DiscoverSortedById) {
  Registry r;
  r.RegisterCard(Card("b", {"network_analysis"}), {});
  r.RegisterCard(Card("a", {"network_analysis"}), {});
  const auto found = r.Discover("network_analysis");
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].card.card_id, "a");
  EXPECT_EQ(found[1].card.card_id, "b");
}

TEST(Registry, DiscoverExcludesOtherActions) {
  Registry r;
  r.RegisterCard(Card("pq", {"protocol_query"}), {});
  EXPECT_TRUE(r.Discover("network_analysis").empty());
}

TEST(Registry, EwmaLatency) {
  Registry r(0.5);
  r.RegisterCard(Card("a", {"x"}), {});
  r.UpdateMetrics("a", {100.0, true, 0.1});
  const AgentMetrics m = r.UpdateMetrics("a", {200.0, true, 0.2});
  EXPECT_DOUBLE_EQ(m.avg_latency_ms, 150.0);
  EXPECT_DOUBLE_EQ(m.load, 0.2);
  EXPECT_EQ(m.sample_count, 2u);
}

TEST(Registry, EwmaAccuracyAfterFailure) {
  Registry r(0.5);
  r.RegisterCard(Card("a", {"x"}), {});
  r.UpdateMetrics("a", {10.0, true, 0.0});
  EXPECT_DOUBLE_EQ(r.UpdateMetrics("a", {10.0, false, 0.0}).historical_accuracy, 0.5);
}

TEST(Registry, FirstObservationOverwritesPrior) {
  Registry r;
  AgentMetrics prior;
  prior.avg_latency_ms = 999.0;
  prior.historical_accuracy = 0.2;
  r.RegisterCard(Card("a", {"x"}), prior);
  const AgentMetrics m = r.UpdateMetrics("a", {40.0, true, 0.3});
  EXPECT_EQ(m.avg_latency_ms, 40.0);
  EXPECT_EQ(m.historical_accuracy, 1.0);
}

TEST(Registry, UpdateUnknownCard) {
  Registry r;
  EXPECT_EQ(CodeOf([&] { r.UpdateMetrics("ghost", {}); }), ErrorCode::kUnknownCard);
}

TEST(Registry, Deregister) {
  Registry r;
  r.RegisterCard(Card("na-1", {"network_analysis"}), {});
  r.Deregister("na-1");
  EXPECT_TRUE(r.Discover("network_analysis").empty());
  EXPECT_EQ(CodeOf([&] { r.Deregister("na-1"); }), ErrorCode::kUnknownCard);
}

TEST(Registry, DeregisterOneOfTwo) {
  Registry r;
  r.RegisterCard(Card("a", {"x"}), {});
  r.RegisterCard(Card("b", {"x"}), {});
  r.Deregister("a");
  const auto found = r.Discover("x");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].card.card_id, "b");
}

TEST(Registry, ConcurrentReadersAndWriters) {
  Registry r;
  for (int i = 0; i < 8; ++i) r.RegisterCard(Card("c" + std::to_string(i), {"x"}), {});
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&r, t] {
      for (int k = 0; k < 500; ++k) {
        r.UpdateMetrics("c" + std::to_string((t + k) % 8), {double(k), k % 2 == 0, 0.5});
        EXPECT_EQ(r.Discover("x").size(), 8u);
      }
    });
  }
  for (auto& th : threads) th.join();
  std::uint64_t samples = 0;
  for (const auto& a : r.Discover("x")) samples += a.metrics.sample_count;
  EXPECT_EQ(samples, 2000u);
}

}  // namespace
}  // namespace netcollab
