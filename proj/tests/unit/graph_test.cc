// Copyright 2026 The Authors.
//
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

#include "circuit/graph.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "circuit/errors.h"
#include "circuit/generators.h"
#include "support/fixtures.h"

namespace circuit {
namespace {

TEST(ParseEdgeListTest, MinimalTwoNodeGraph) {
  ParsedGraph parsed = ParseEdgeList("0 1\n1 0\n");
  const Graph& g = parsed.graph;
  EXPECT_EQ(g.num_nodes(), 2u);
  ASSERT_EQ(g.num_arcs(), 2u);
  for (const Arc& a : g.arcs()) EXPECT_DOUBLE_EQ(a.conductance, 1.0);
  EXPECT_TRUE(g.directed());
}

TEST(ParseEdgeListTest, CommentsWeightsAndReindexing) {
  ParsedGraph parsed = ParseEdgeList("# comment\n5 9 2.5\n");
  const Graph& g = parsed.graph;
  ASSERT_EQ(g.num_nodes(), 2u);
  ASSERT_EQ(g.num_arcs(), 1u);
  EXPECT_EQ(g.arcs()[0], (Arc{0, 1, 2.5}));
  EXPECT_EQ(g.label(0), 5u);
  EXPECT_EQ(g.label(1), 9u);
  EXPECT_EQ(g.IndexOf(5), 0u);
  EXPECT_EQ(g.IndexOf(9), 1u);
  EXPECT_FALSE(g.IndexOf(7).has_value());
}

TEST(ParseEdgeListTest, DuplicatesAggregate) {
  ParsedGraph parsed = ParseEdgeList("0 1\n0 1\n");
  ASSERT_EQ(parsed.graph.num_arcs(), 1u);
  EXPECT_DOUBLE_EQ(parsed.graph.arcs()[0].conductance, 2.0);
  EXPECT_EQ(parsed.stats.duplicates_merged, 1u);
}

TEST(ParseEdgeListTest, SelfLoopsDroppedButNodesKept) {
  ParsedGraph parsed = ParseEdgeList("3 3\n1 2\n4 4\n");
  EXPECT_EQ(parsed.graph.num_nodes(), 4u);
  EXPECT_EQ(parsed.graph.num_arcs(), 1u);
  EXPECT_EQ(parsed.stats.self_loops_dropped, 2u);
}

TEST(ParseEdgeListTest, UndirectedEmitsBothDirections) {
  ParsedGraph parsed = ParseEdgeList("1 2 0.5\n", {.undirected = true});
  const Graph& g = parsed.graph;
  EXPECT_FALSE(g.directed());
  ASSERT_EQ(g.num_arcs(), 2u);
  EXPECT_EQ(g.arcs()[0], (Arc{0, 1, 0.5}));
  EXPECT_EQ(g.arcs()[1], (Arc{1, 0, 0.5}));
}

TEST(ParseEdgeListTest, AcceptsTabsAndBlankLines) {
  ParsedGraph parsed = ParseEdgeList("\n  1\t2  \n\n2 3 1e-1\r\n");
  EXPECT_EQ(parsed.graph.num_nodes(), 3u);
  EXPECT_EQ(parsed.graph.num_arcs(), 2u);
}

TEST(ParseEdgeListTest, ErrorsCarryLineNumbers) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  const Case cases[] = {
      {"0 1\nx 2\n", 2},      // non-integer label
      {"0 1\n1 2\n-1 2\n", 3},  // negative label
      {"0 1 -2\n", 1},       // negative weight
      {"0 1 abc\n", 1},      // junk weight
      {"0 1 0\n", 1},        // zero weight
      {"0\n", 1},            // missing field
      {"0 1 1 1\n", 1},      // extra field
      {"0 1.5\n", 1},        // fractional label
  };
  for (const Case& c : cases) {
    try {
      ParseEdgeList(c.text);
      ADD_FAILURE() << "no error for: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
    }
  }
}

TEST(ParseEdgeListTest, EmptyInputIsAnError) {
  EXPECT_THROW(ParseEdgeList(""), ParseError);
  EXPECT_THROW(ParseEdgeList("# only comments\n\n"), ParseError);
}

TEST(ParseEdgeListTest, MissingFileIsAParseError) {
  EXPECT_THROW(ReadEdgeListFile("/nonexistent/graph.txt"), ParseError);
}

TEST(GraphTest, FromArcsRejectsBadConductance) {
  EXPECT_THROW(Graph::FromArcs(2, {{0, 1, 0.0}}), ValidationError);
  EXPECT_THROW(Graph::FromArcs(2, {{0, 1, -1.0}}), ValidationError);
  EXPECT_THROW(Graph::FromArcs(2, {{0, 2, 1.0}}), ArgumentError);
}

TEST(GraphTest, AdjacencyViewsAgree) {
  Graph g = generators::RandomWeightedDirected(40, 0.1, 3);
  std::size_t out_total = 0;
  std::size_t in_total = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (const Arc& a : g.OutArcs(v)) EXPECT_EQ(a.src, v);
    double d = 0.0;
    NodeId prev_src = 0;
    bool first = true;
    for (std::uint32_t id : g.InArcIds(v)) {
      const Arc& a = g.arcs()[id];
      EXPECT_EQ(a.dst, v);
      if (!first) EXPECT_LT(prev_src, a.src);
      prev_src = a.src;
      first = false;
      d += a.conductance;
    }
    EXPECT_NEAR(d, g.InConductance(v), 1e-12);
    out_total += g.OutDegree(v);
    in_total += g.InDegree(v);
  }
  EXPECT_EQ(out_total, g.num_arcs());
  EXPECT_EQ(in_total, g.num_arcs());
}

TEST(ReverseTest, FlipsArcs) {
  Graph g = ParseEdgeList("0 1\n").graph;
  Graph r = Reverse(g);
  ASSERT_EQ(r.num_arcs(), 1u);
  EXPECT_EQ(r.arcs()[0], (Arc{1, 0, 1.0}));
}

TEST(ReverseTest, UndirectedGraphIsFixedPoint) {
  Graph g = generators::PreferentialAttachment(50, 2, 11);
  EXPECT_EQ(Reverse(g), g);
}

TEST(ReverseTest, IsAnInvolution) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = generators::RandomWeightedDirected(30, 0.15, seed);
    EXPECT_EQ(Reverse(Reverse(g)), g);
  }
}

TEST(GraphTest, IdMapRoundTrips) {
  std::mt19937_64 rng(5);
  std::ostringstream text;
  for (int i = 0; i < 200; ++i) {
    text << rng() % 100000 << ' ' << rng() % 100000 << '\n';
  }
  Graph g = ParseEdgeList(text.str()).graph;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    EXPECT_EQ(g.IndexOf(g.label(v)), v);
    if (v > 0) EXPECT_LT(g.label(v - 1), g.label(v));
  }
}

}  // namespace
}  // namespace circuit
