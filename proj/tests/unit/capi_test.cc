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

// Exercises the shared library through its C header only.

#include "hypercover/hypercover.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

class Text {
 public:
  Text() = default;
  ~Text() { hc_string_free(s_); }
  char** out() { return &s_; }
  std::string str() const { return s_ == nullptr ? "" : s_; }
  json doc() const { return json::parse(str()); }

 private:
  char* s_ = nullptr;
};

hc_hypergraph* ParseH(const std::string& text, int strict = 1) {
  hc_hypergraph* h = nullptr;
  EXPECT_EQ(hc_hypergraph_parse(text.data(), text.size(), strict, &h, nullptr),
            HC_OK)
      << hc_last_error();
  return h;
}

hc_graph* ParseG(const std::string& text) {
  hc_graph* g = nullptr;
  EXPECT_EQ(hc_graph_parse(text.data(), text.size(), 1, &g, nullptr), HC_OK)
      << hc_last_error();
  return g;
}

TEST(CApiTest, ParseWriteRoundTrip) {
  const std::string text = "p hg 3 2\ne 1 2 # a\ne 2 3\n";
  hc_hypergraph* h = ParseH(text);
  EXPECT_EQ(hc_hypergraph_vertex_count(h), 3u);
  EXPECT_EQ(hc_hypergraph_edge_count(h), 2u);
  Text out;
  ASSERT_EQ(hc_hypergraph_write(h, out.out()), HC_OK);
  EXPECT_EQ(out.str(), text);
  hc_hypergraph_free(h);
}

TEST(CApiTest, ParseErrorsCarryStatusAndMessage) {
  hc_hypergraph* h = nullptr;
  const std::string dup = "p hg 3 2\ne 1 2\ne 2 1\n";
  EXPECT_EQ(hc_hypergraph_parse(dup.data(), dup.size(), 1, &h, nullptr),
            HC_ERR_DUPLICATE_EDGE);
  EXPECT_EQ(h, nullptr);
  EXPECT_STREQ(hc_status_name(HC_ERR_DUPLICATE_EDGE), "DuplicateEdge");
  EXPECT_GT(std::strlen(hc_last_error()), 0u);

  hc_parse_report report{};
  ASSERT_EQ(hc_hypergraph_parse(dup.data(), dup.size(), 0, &h, &report), HC_OK);
  EXPECT_EQ(report.merged_edges, 1u);
  EXPECT_EQ(hc_hypergraph_edge_count(h), 1u);
  hc_hypergraph_free(h);

  const std::string bad = "p hg 2 1\nz\n";
  EXPECT_EQ(hc_hypergraph_parse(bad.data(), bad.size(), 1, &h, nullptr),
            HC_ERR_SYNTAX);
  EXPECT_EQ(hc_hypergraph_parse(nullptr, 3, 1, &h, nullptr),
            HC_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, StatusNames) {
  EXPECT_STREQ(hc_status_name(HC_OK), "Ok");
  EXPECT_STREQ(hc_status_name(HC_ERR_ISOLATED_VERTEX), "IsolatedVertex");
  EXPECT_STREQ(hc_status_name(HC_ERR_NOT_A_TREE), "NotATree");
  EXPECT_STREQ(hc_status_name(HC_ERR_TOO_LARGE), "TooLarge");
  EXPECT_STREQ(hc_status_name(HC_ERR_INFEASIBLE), "Infeasible");
  EXPECT_STREQ(hc_version(), "0.1.0");
}

TEST(CApiTest, GapFamilyDegeneracyAndCover) {
  hc_hypergraph* h = nullptr;
  ASSERT_EQ(hc_generate_gap(5, &h), HC_OK);
  Text strong;
  ASSERT_EQ(hc_degeneracy(h, HC_DEGENERACY_STRONG, strong.out()), HC_OK);
  EXPECT_EQ(strong.doc()["value"], 3);
  EXPECT_EQ(strong.doc()["order"].size(), 5u);
  EXPECT_EQ(strong.doc()["kind"], "strong");

  Text mighty;
  ASSERT_EQ(hc_degeneracy(h, HC_DEGENERACY_MIGHTY_BF, mighty.out()), HC_OK);
  EXPECT_EQ(mighty.doc()["value"], 2);

  Text cover;
  ASSERT_EQ(hc_cover(h, cover.out()), HC_OK);
  const json c = cover.doc();
  EXPECT_EQ(c["cover"], json({1, 2}));
  EXPECT_EQ(c["independent"], json({1}));
  EXPECT_EQ(c["mighty_bound"], 2);
  EXPECT_EQ(c["checks"]["inequality_holds"], true);

  Text exact;
  ASSERT_EQ(hc_exact(h, nullptr, HC_MIN_EDGE_COVER, exact.out()), HC_OK);
  EXPECT_EQ(exact.doc()["value"], 2);
  EXPECT_EQ(exact.doc()["witness"], json({1, 2}));
  hc_hypergraph_free(h);

  EXPECT_EQ(hc_generate_gap(2, &h), HC_ERR_N_TOO_SMALL);
}

TEST(CApiTest, TransversalDualAndVc) {
  hc_hypergraph* h = ParseH("p hg 3 2\ne 1 2\ne 2 3\n");
  Text t;
  ASSERT_EQ(hc_transversal(h, t.out()), HC_OK);
  EXPECT_EQ(t.doc()["transversal"], json({2}));
  EXPECT_EQ(t.doc()["matching"], json({1}));

  hc_hypergraph* d = nullptr;
  ASSERT_EQ(hc_hypergraph_dual(h, &d), HC_OK);
  EXPECT_EQ(hc_hypergraph_vertex_count(d), 2u);
  EXPECT_EQ(hc_hypergraph_edge_count(d), 3u);
  hc_hypergraph_free(d);

  Text vc;
  ASSERT_EQ(hc_vc_dimension(h, vc.out()), HC_OK);
  EXPECT_EQ(vc.doc()["value"], 1);
  EXPECT_EQ(vc.doc()["none_shattered"], false);
  hc_hypergraph_free(h);

  hc_hypergraph* isolated = ParseH("p hg 3 1\ne 1 2\n");
  Text none;
  EXPECT_EQ(hc_cover(isolated, none.out()), HC_ERR_ISOLATED_VERTEX);
  EXPECT_EQ(hc_hypergraph_dual(isolated, &d), HC_ERR_ISOLATED_VERTEX);
  Text infeasible;
  EXPECT_EQ(hc_exact(isolated, nullptr, HC_MIN_EDGE_COVER, infeasible.out()),
            HC_ERR_INFEASIBLE);
  hc_hypergraph_free(isolated);
}

TEST(CApiTest, TreeDominationAndAudit) {
  hc_graph* tree = ParseG("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  Text closed;
  ASSERT_EQ(hc_dominate(tree, HC_CLOSED, 1, closed.out()), HC_OK);
  EXPECT_EQ(closed.doc()["dominating"], json({2, 3}));
  EXPECT_EQ(closed.doc()["packing"], json({1, 4}));
  EXPECT_EQ(closed.doc()["cross_check"]["agrees"], true);

  Text exact;
  ASSERT_EQ(hc_exact(nullptr, tree, HC_MAX_TWO_PACKING, exact.out()), HC_OK);
  EXPECT_EQ(exact.doc()["value"], 2);

  Text audit;
  ASSERT_EQ(hc_audit(tree, 100, 3, audit.out()), HC_OK);
  EXPECT_EQ(audit.doc()["passed"], true);
  EXPECT_EQ(audit.doc()["samples"], 100);
  hc_graph_free(tree);

  hc_graph* cycle = ParseG("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  Text bad;
  EXPECT_EQ(hc_dominate(cycle, HC_OPEN, 0, bad.out()), HC_ERR_NOT_A_TREE);
  EXPECT_EQ(hc_exact(nullptr, cycle, HC_MIN_EDGE_COVER, bad.out()),
            HC_ERR_INVALID_ARGUMENT);
  hc_graph_free(cycle);
}

TEST(CApiTest, VerifyUsesOneBasedIds) {
  hc_hypergraph* h = ParseH("p hg 3 2\ne 1 2\ne 2 3\n");
  int valid = -1;
  const uint32_t cover[] = {1, 2};
  ASSERT_EQ(hc_verify(h, nullptr, HC_SET_EDGE_COVER, cover, 2, &valid), HC_OK);
  EXPECT_EQ(valid, 1);
  ASSERT_EQ(hc_verify(h, nullptr, HC_SET_MATCHING, cover, 2, &valid), HC_OK);
  EXPECT_EQ(valid, 0);
  const uint32_t zero[] = {0};
  EXPECT_EQ(hc_verify(h, nullptr, HC_SET_TRANSVERSAL, zero, 1, &valid),
            HC_ERR_ID_OUT_OF_RANGE);
  const uint32_t far[] = {4};
  EXPECT_EQ(hc_verify(h, nullptr, HC_SET_TRANSVERSAL, far, 1, &valid),
            HC_ERR_ID_OUT_OF_RANGE);
  EXPECT_EQ(hc_verify(h, nullptr, HC_SET_DOMINATING, cover, 2, &valid),
            HC_ERR_INVALID_ARGUMENT);
  hc_hypergraph_free(h);

  hc_graph* g = ParseG("p edge 3 2\ne 1 2\ne 2 3\n");
  const uint32_t center[] = {2};
  ASSERT_EQ(hc_verify(nullptr, g, HC_SET_DOMINATING, center, 1, &valid),
            HC_OK);
  EXPECT_EQ(valid, 1);
  hc_graph_free(g);
}

TEST(CApiTest, GeneratorsAreDeterministic) {
  hc_graph* a = nullptr;
  hc_graph* b = nullptr;
  ASSERT_EQ(hc_generate_tree(30, 7, &a), HC_OK);
  ASSERT_EQ(hc_generate_tree(30, 7, &b), HC_OK);
  Text ta;
  Text tb;
  ASSERT_EQ(hc_graph_write(a, ta.out()), HC_OK);
  ASSERT_EQ(hc_graph_write(b, tb.out()), HC_OK);
  EXPECT_EQ(ta.str(), tb.str());
  EXPECT_EQ(hc_graph_vertex_count(a), 30u);
  hc_graph_free(a);
  hc_graph_free(b);

  hc_hypergraph* h = nullptr;
  ASSERT_EQ(hc_generate_hypergraph(10, 12, 4, 7, 1, &h), HC_OK);
  EXPECT_EQ(hc_hypergraph_edge_count(h), 12u);
  hc_hypergraph_free(h);
  EXPECT_EQ(hc_generate_hypergraph(2, 4, 2, 7, 0, &h),
            HC_ERR_INFEASIBLE_EDGE_COUNT);

  hc_graph* g = nullptr;
  EXPECT_EQ(hc_generate_graph(5, -0.5, 1, &g), HC_ERR_PARAMETER);
  ASSERT_EQ(hc_generate_graph(5, 1.0, 1, &g), HC_OK);
  hc_graph_free(g);
}

TEST(CApiTest, NullHandles) {
  Text t;
  EXPECT_EQ(hc_cover(nullptr, t.out()), HC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hc_dominate(nullptr, HC_CLOSED, 0, t.out()),
            HC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hc_hypergraph_vertex_count(nullptr), 0u);
  hc_hypergraph_free(nullptr);
  hc_graph_free(nullptr);
  hc_string_free(nullptr);
}

TEST(CApiTest, BruteForceCapIsTooLarge) {
  hc_hypergraph* h = nullptr;
  ASSERT_EQ(hc_generate_gap(15, &h), HC_OK);
  Text t;
  EXPECT_EQ(hc_degeneracy(h, HC_DEGENERACY_MIGHTY_BF, t.out()),
            HC_ERR_TOO_LARGE);
  hc_hypergraph_free(h);
}

}  // namespace
