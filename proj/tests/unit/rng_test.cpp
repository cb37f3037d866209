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

#include <gtest/gtest.h>

#include "netcollab/error.hpp"
#include "netcollab/rng.hpp"
#include "netcollab/vocabulary.hpp"
#include "support/oracles.hpp"

namespace netcollab {
namespace {

TEST(Rng, SameStreamSameSequence) {
  Rng a(42, {3, 1});
  Rng b(42, {3, 1});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(Rng, StreamsDiffer) {
  Rng a(42, {3, 1});
  Rng b(42, {3, 2});
  Rng c(43, {3, 1});
  const auto x = a.NextU64();
  EXPECT_NE(x, b.NextU64());
  EXPECT_NE(x, c.NextU64());
}

TEST(Rng, UniformInUnitInterval) {
  Rng r(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, CategoricalFrequencies) {
  Rng r(5);
  const std::vector<double> w{1.0, 0.0, 3.0};
  std::size_t counts[3] = {0, 0, 0};
  const std::size_t n = 20000;
  for (std::size_t i = 0; i < n; ++i) ++counts[r.Categorical(w)];
  EXPECT_EQ(counts[1], 0u);
  EXPECT_TRUE(oracle::WithinBinomialBand(counts[0], n, 0.25, 4.0));
  EXPECT_TRUE(oracle::WithinBinomialBand(counts[2], n, 0.75, 4.0));
}

TEST(Vocabulary, FixedIdsAndAppendOrder) {
  Vocabulary v;
  EXPECT_EQ(v.size(), 8u);
  const Token a = v.Add("ack", SymbolKind::kAnswer);
  EXPECT_EQ(a.id, 8u);
  EXPECT_EQ(v.Add("ack", SymbolKind::kAnswer), a);
  EXPECT_EQ(v.Name(a), "ack");
  EXPECT_EQ(v.Kind(a), SymbolKind::kAnswer);
  EXPECT_TRUE(v.IsControl(Vocabulary::kAnsClose));
  EXPECT_FALSE(v.IsControl(Vocabulary::kAgentOk));
}

TEST(Vocabulary, KindClashAndUnknownName) {
  Vocabulary v;
  v.Add("ack", SymbolKind::kAnswer);
  EXPECT_THROW(v.Add("ack", SymbolKind::kPayload), Error);
  EXPECT_THROW(v.Get("missing"), Error);
  EXPECT_FALSE(v.Find("missing").has_value());
}

}  // namespace
}  // namespace netcollab
