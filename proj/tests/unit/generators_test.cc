// Copyright 2026 The hypercover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypercover/generators.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "hypercover/error.h"
#include "hypercover/hypergraph_io.h"
#include "test_support.h"

namespace hypercover {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternal;
}

TEST(GapFamilyTest, Five) {
  const Hypergraph h = GapFamily(5);
  EXPECT_EQ(h.edges(), (std::vector<VertexSet>{
                           {0, 1}, {0, 2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}));
  EXPECT_EQ(h.label(0), "N[v1]");
  EXPECT_EQ(h.label(1), "N(v2)");
  EXPECT_EQ(h.label(4), "N(v5)");
}

TEST(GapFamilyTest, Three) {
  EXPECT_EQ(GapFamily(3).edges(),
            (std::vector<VertexSet>{{0, 1}, {0, 2}, {1}}));
}

TEST(GapFamilyTest, TooSmall) {
  EXPECT_EQ(CodeOf([] { GapFamily(2); }), ErrorCode::kNTooSmall);
  EXPECT_EQ(CodeOf([] { GapFamily(0); }), ErrorCode::kNTooSmall);
}

TEST(GapFamilyTest, WithoutFirstVertexAllStrongDegreesAreNMinusTwo) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const Hypergraph h = GapFamily(n);
    VertexSet rest;
    for (VertexId v = 1; v < n; ++v) rest.push_back(v);
    const SubHypergraph sub = Restrict(h, rest);
    for (VertexId v : rest) EXPECT_EQ(StrongDegree(sub, v), n - 2) << n;
  }
}

TEST(RandomTreeTest, ShapeAndDeterminism) {
  EXPECT_EQ(RandomTree(1, 4).num_edges(), 0u);
  EXPECT_EQ(RandomTree(2, 4).num_edges(), 1u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph t = RandomTree(2 + seed % 40, seed);
    EXPECT_TRUE(t.IsTree());
    EXPECT_EQ(t.num_edges(), t.num_vertices() - 1);
    EXPECT_EQ(t, RandomTree(2 + seed % 40, seed));
  }
  EXPECT_EQ(CodeOf([] { RandomTree(0, 1); }), ErrorCode::kParameterError);
}

TEST(PruferTest, DecodeEncodeRoundTrip) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 30;
    std::vector<VertexId> seq(n - 2);
    for (VertexId& a : seq) a = static_cast<VertexId>(rng.Below(n));
    const Graph t = PruferDecode(n, seq);
    EXPECT_TRUE(t.IsTree());
    EXPECT_EQ(PruferEncode(t), seq);
  }
  EXPECT_EQ(PruferDecode(4, std::vector<VertexId>{1, 1}).Edges(),
            (std::vector<GraphEdge>{{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(CodeOf([] { PruferDecode(4, std::vector<VertexId>{4, 0}); }),
            ErrorCode::kParameterError);
  EXPECT_EQ(CodeOf([] { PruferDecode(4, std::vector<VertexId>{0}); }),
            ErrorCode::kParameterError);
  EXPECT_EQ(CodeOf([] { PruferEncode(Graph(3, std::vector<GraphEdge>{{0, 1}})); }),
            ErrorCode::kNotATree);
}

TEST(RandomHypergraphTest, DistinctEdgesWithinSize) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Hypergraph h = RandomHypergraph(6, 8, 3, seed);
    EXPECT_EQ(h.num_edges(), 8u);
    std::set<VertexSet> seen(h.edges().begin(), h.edges().end());
    EXPECT_EQ(seen.size(), 8u);
    for (const VertexSet& e : h.edges()) {
      EXPECT_GE(e.size(), 1u);
      EXPECT_LE(e.size(), 3u);
    }
    EXPECT_EQ(WriteHypergraph(h), WriteHypergraph(RandomHypergraph(6, 8, 3, seed)));
  }
}

TEST(RandomHypergraphTest, CoverFeasibleCoversEveryVertex) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const std::size_t max = 1 + seed % 4 > n ? n : 1 + seed % 4;
    const std::size_t m = (n + max - 1) / max + (max > 1 ? seed % 3 : 0);
    const Hypergraph h = RandomHypergraph(n, m, max, seed, true);
    for (VertexId v = 0; v < n; ++v) EXPECT_FALSE(h.incident_edges(v).empty());
  }
}

TEST(RandomHypergraphTest, ExhaustsSmallUniverse) {
  // All 3 nonempty subsets of a 2-set.
  const Hypergraph h = RandomHypergraph(2, 3, 2, 9);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(CodeOf([] { RandomHypergraph(2, 4, 2, 9); }),
            ErrorCode::kInfeasibleEdgeCount);
  EXPECT_EQ(CodeOf([] { RandomHypergraph(3, 2, 0, 9); }),
            ErrorCode::kParameterError);
  EXPECT_EQ(CodeOf([] { RandomHypergraph(3, 2, 4, 9); }),
            ErrorCode::kParameterError);
  EXPECT_EQ(CodeOf([] { RandomHypergraph(10, 2, 3, 9, true); }),
            ErrorCode::kParameterError);
}

TEST(RandomGraphTest, ExtremesAndDeterminism) {
  EXPECT_EQ(RandomGraph(6, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(RandomGraph(6, 1.0, 1).num_edges(), 15u);
  EXPECT_EQ(RandomGraph(20, 0.3, 7), RandomGraph(20, 0.3, 7));
  EXPECT_EQ(CodeOf([] { RandomGraph(3, 1.5, 1); }),
            ErrorCode::kParameterError);
}

TEST(RngTest, BelowStaysInRangeAndUnitInInterval) {
  Rng rng(123);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.Below(7), 7u);
    const double u = rng.Unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
}

// Pins the stream so that a platform or library change is noticed.
TEST(RngTest, KnownFirstOutput) {
  Rng rng(5489);
  EXPECT_EQ(rng.Next(), 14514284786278117030ull);
}

}  // namespace
}  // namespace hypercover
