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

#include "hypercover/domination.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hypercover/degeneracy.h"
#include "hypercover/error.h"
#include "hypercover/generators.h"
#include "test_support.h"

namespace hypercover {
namespace {

Graph Path(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Star(std::size_t leaves) {
  std::vector<GraphEdge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternal;
}

TEST(GraphTest, ParseAndWrite) {
  const ParsedGraph parsed =
      ParseGraph("c comment\np edge 3 2\ne 1 2\n# other\ne 3 2\n");
  EXPECT_EQ(parsed.graph.num_vertices(), 3u);
  EXPECT_EQ(parsed.graph.Edges(),
            (std::vector<GraphEdge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(WriteGraph(parsed.graph), "p edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(ParseGraph(WriteGraph(parsed.graph)).graph, parsed.graph);
}

TEST(GraphTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseGraph("p edge 2 1\ne 1 1\n"); }),
            ErrorCode::kInvalidGraph);
  EXPECT_EQ(CodeOf([] { ParseGraph("p edge 2 2\ne 1 2\ne 2 1\n"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf([] { ParseGraph("p edge 2 1\ne 1 3\n"); }),
            ErrorCode::kVertexOutOfRange);
  EXPECT_EQ(CodeOf([] { ParseGraph("p edge 2 1\ne 1\n"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseGraph("p edge 2 2\ne 1 2\n"); }),
            ErrorCode::kSyntaxError);
  const ParsedGraph merged =
      ParseGraph("p edge 2 2\ne 1 2\ne 2 1\n", DuplicatePolicy::kMerge);
  EXPECT_EQ(merged.merged_edges, 1u);
  EXPECT_EQ(merged.graph.num_edges(), 1u);
}

TEST(GraphTest, IsTree) {
  EXPECT_TRUE(Path(1).IsTree());
  EXPECT_TRUE(Path(5).IsTree());
  EXPECT_FALSE(Graph(3, std::vector<GraphEdge>{{0, 1}}).IsTree());
  EXPECT_FALSE(
      Graph(3, std::vector<GraphEdge>{{0, 1}, {1, 2}, {0, 2}}).IsTree());
  EXPECT_FALSE(Graph().IsTree());
}

TEST(NeighborhoodHypergraphTest, TriangleMergesToOneEdge) {
  const Graph k3(3, std::vector<GraphEdge>{{0, 1}, {1, 2}, {0, 2}});
  const NeighborhoodHypergraph nh =
      BuildNeighborhoodHypergraph(k3, NeighborhoodKind::kClosed);
  EXPECT_EQ(nh.hypergraph.edges(), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(nh.edge_of, (std::vector<EdgeId>{0, 0, 0}));
  EXPECT_EQ(nh.hypergraph.label(0), "N[v1],N[v2],N[v3]");
}

TEST(NeighborhoodHypergraphTest, PathClosedAndOpen) {
  const NeighborhoodHypergraph closed =
      BuildNeighborhoodHypergraph(Path(3), NeighborhoodKind::kClosed);
  EXPECT_EQ(closed.hypergraph.edges(),
            (std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}}));
  const NeighborhoodHypergraph open =
      BuildNeighborhoodHypergraph(Path(3), NeighborhoodKind::kOpen);
  EXPECT_EQ(open.hypergraph.edges(), (std::vector<VertexSet>{{1}, {0, 2}}));
  EXPECT_EQ(open.edge_of, (std::vector<EdgeId>{0, 1, 0}));
  EXPECT_EQ(open.hypergraph.label(0), "N(v1),N(v3)");
  EXPECT_EQ(CodeOf([] {
              BuildNeighborhoodHypergraph(Graph(2, std::vector<GraphEdge>{}),
                                          NeighborhoodKind::kOpen);
            }),
            ErrorCode::kIsolatedVertexForOpen);
}

TEST(CheckGraphTest, Examples) {
  const Graph p4 = Path(4);
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kDominating,
                         std::vector<VertexId>{1, 2}));
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kTwoPacking,
                         std::vector<VertexId>{0, 3}));
  EXPECT_FALSE(CheckGraph(p4, GraphSetKind::kTwoPacking,
                          std::vector<VertexId>{0, 2}));
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kDominating,
                         std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_FALSE(CheckGraph(p4, GraphSetKind::kDominating,
                          std::vector<VertexId>{}));
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kTwoPacking,
                         std::vector<VertexId>{}));
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kTotalDominating,
                         std::vector<VertexId>{1, 2}));
  EXPECT_FALSE(CheckGraph(p4, GraphSetKind::kTotalDominating,
                          std::vector<VertexId>{0, 3}));
  EXPECT_TRUE(CheckGraph(p4, GraphSetKind::kOpenTwoPacking,
                         std::vector<VertexId>{0, 1}));
  EXPECT_EQ(CodeOf([&] {
              CheckGraph(p4, GraphSetKind::kDominating,
                         std::vector<VertexId>{4});
            }),
            ErrorCode::kVertexOutOfRange);
  for (GraphSetKind k :
       {GraphSetKind::kDominating, GraphSetKind::kTotalDominating,
        GraphSetKind::kTwoPacking, GraphSetKind::kOpenTwoPacking}) {
    EXPECT_EQ(ParseGraphSetKind(GraphSetKindName(k)), k);
  }
  EXPECT_EQ(ParseNeighborhoodKind("open"), NeighborhoodKind::kOpen);
  EXPECT_FALSE(ParseNeighborhoodKind("half").has_value());
}

TEST(TreeDominationTest, Star) {
  const DominationCertificate cert =
      TreeDomination(Star(3), NeighborhoodKind::kClosed);
  EXPECT_EQ(cert.dominating, (VertexSet{0}));
  EXPECT_EQ(cert.packing.size(), 1u);
  EXPECT_TRUE(cert.equal);
}

TEST(TreeDominationTest, PathOfFourClosed) {
  const DominationCertificate cert =
      TreeDomination(Path(4), NeighborhoodKind::kClosed);
  EXPECT_EQ(cert.dominating, (VertexSet{1, 2}));
  EXPECT_EQ(cert.packing, (VertexSet{0, 3}));
  EXPECT_TRUE(cert.dominating_valid);
  EXPECT_TRUE(cert.packing_valid);
}

TEST(TreeDominationTest, PathOfTwoOpen) {
  const DominationCertificate cert =
      TreeDomination(Path(2), NeighborhoodKind::kOpen);
  EXPECT_EQ(cert.dominating, (VertexSet{0, 1}));
  EXPECT_EQ(cert.packing, (VertexSet{0, 1}));
}

TEST(TreeDominationTest, SingleVertex) {
  const DominationCertificate cert =
      TreeDomination(Path(1), NeighborhoodKind::kClosed);
  EXPECT_EQ(cert.dominating, (VertexSet{0}));
  EXPECT_EQ(cert.packing, (VertexSet{0}));
  EXPECT_EQ(CodeOf([] { TreeDomination(Path(1), NeighborhoodKind::kOpen); }),
            ErrorCode::kSingleVertexOpen);
}

TEST(TreeDominationTest, RejectsNonTrees) {
  const Graph cycle(3, std::vector<GraphEdge>{{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(CodeOf([&] { TreeDomination(cycle, NeighborhoodKind::kClosed); }),
            ErrorCode::kNotATree);
  const Graph forest(4, std::vector<GraphEdge>{{0, 1}, {2, 3}});
  EXPECT_EQ(CodeOf([&] { TreeDomination(forest, NeighborhoodKind::kOpen); }),
            ErrorCode::kNotATree);
}

// A spider whose naive leaf deletion would split the tree and strand a
// vertex: 0-1, 1-2, 2-3, 2-4.
TEST(TreeDominationTest, BranchingTree) {
  const Graph t(5, std::vector<GraphEdge>{{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  for (NeighborhoodKind kind :
       {NeighborhoodKind::kClosed, NeighborhoodKind::kOpen}) {
    const DominationCertificate cert = TreeDomination(t, kind, true);
    const testing::GraphOptima best = testing::NaiveGraphOptima(t);
    if (kind == NeighborhoodKind::kClosed) {
      EXPECT_EQ(cert.dominating.size(), best.domination);
      EXPECT_EQ(cert.packing.size(), best.packing);
    } else {
      EXPECT_EQ(cert.dominating.size(), *best.total_domination);
      EXPECT_EQ(cert.packing.size(), best.open_packing);
    }
    ASSERT_TRUE(cert.cross_check.has_value());
    EXPECT_TRUE(cert.cross_check->agrees);
  }
}

TEST(TreeDominationTest, OptimalOnRandomTrees) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 13;
    const Graph tree = testing::RandomTestTree(rng, n);
    const testing::GraphOptima best = testing::NaiveGraphOptima(tree);
    const DominationCertificate closed =
        TreeDomination(tree, NeighborhoodKind::kClosed, true);
    EXPECT_EQ(closed.dominating.size(), best.domination);
    EXPECT_EQ(closed.packing.size(), best.packing);
    EXPECT_TRUE(closed.cross_check->agrees);
    const DominationCertificate open =
        TreeDomination(tree, NeighborhoodKind::kOpen, true);
    EXPECT_EQ(open.dominating.size(), *best.total_domination);
    EXPECT_EQ(open.packing.size(), best.open_packing);
    EXPECT_TRUE(open.cross_check->agrees);
  }
}

TEST(TreeDominationTest, ClosedHypergraphOfTreeHasDegeneracyOne) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph tree = testing::RandomTestTree(rng, 1 + trial % 14);
    const Hypergraph h =
        BuildNeighborhoodHypergraph(tree, NeighborhoodKind::kClosed).hypergraph;
    EXPECT_EQ(StrongDegeneracy(h).value, 1u);
    EXPECT_EQ(MightyDegeneracyBruteForce(h).value, 1u);
  }
}

TEST(AuditTest, RandomGraphsPass) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 12, 0.3);
    const AuditReport report = NeighborhoodEquivalenceAudit(g, 200, trial);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.samples, 200u);
    EXPECT_GT(report.closed_checks, 0u);
  }
}

TEST(AuditTest, TreesCheckLeaves) {
  const AuditReport report = NeighborhoodEquivalenceAudit(Star(4), 50, 1);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.leaf_checks, 4u);
  EXPECT_FALSE(report.open_skipped);
}

TEST(AuditTest, IsolatedVertexSkipsOpenSide) {
  const Graph g(3, std::vector<GraphEdge>{{0, 1}});
  const AuditReport report = NeighborhoodEquivalenceAudit(g, 50, 1);
  EXPECT_TRUE(report.open_skipped);
  EXPECT_EQ(report.open_checks, 0u);
  EXPECT_TRUE(report.passed());
}

}  // namespace
}  // namespace hypercover
