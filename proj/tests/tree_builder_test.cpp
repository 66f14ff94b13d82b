// Copyright 2026 The Scrolly Authors. All Rights Reserved.
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


#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "scrolly/samples.hpp"
#include "scrolly/tree_builder.hpp"

namespace scrolly {
namespace {

std::vector<std::vector<NodeId>> layers_of(const std::vector<Step>& steps) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& s : steps) out.push_back(s.layers);
  return out;
}

std::vector<NodeId> ids(std::initializer_list<const char*> names) {
  std::vector<NodeId> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

TEST(FlattenTest, LayeredSequence) {
  const auto g = samples::layered_document().graph;
  const auto steps = flatten_segment(g, NodeId("A"));
  const std::vector<std::vector<NodeId>> expected{
      ids({"A"}), ids({"A", "B"}), ids({"A", "B", "C"}), ids({"A", "D"})};
  EXPECT_EQ(layers_of(steps), expected);
  EXPECT_EQ(steps.back().owner(), NodeId("D"));
  EXPECT_EQ(layers_of(flatten_segment(g, NodeId("E"))),
            std::vector<std::vector<NodeId>>{ids({"E"})});
}

TEST(FlattenTest, RejectsNonHeadsAndInvalidGraphs) {
  const auto g = samples::layered_document().graph;
  EXPECT_THROW(flatten_segment(g, NodeId("B")), GraphError);
  EXPECT_THROW(flatten_segment(g, NodeId("Z")), GraphError);
  const auto demo = samples::demo_document().graph;
  EXPECT_THROW(flatten_segment(demo, NodeId("choice")), GraphError);
  auto broken = StoryGraph::from_parts(
      {{NodeId("A"), Text{"a"}, std::nullopt}, {NodeId("B"), Text{"b"}, std::nullopt}}, {});
  EXPECT_THROW(flatten_segment(broken, NodeId("A")), GraphError);
  EXPECT_THROW(build_tree(broken), GraphError);
}

TEST(FlattenTest, DeepNestingFollowsTheRecurrence) {
  // H sub a, a sub b, b main c, c sub d, a main e.
  auto g = StoryGraph::from_parts(
      {{NodeId("H"), Text{"h"}, std::nullopt},
       {NodeId("a"), Text{"a"}, std::nullopt},
       {NodeId("b"), Text{"b"}, std::nullopt},
       {NodeId("c"), Text{"c"}, std::nullopt},
       {NodeId("d"), Text{"d"}, std::nullopt},
       {NodeId("e"), Text{"e"}, std::nullopt}},
      {{NodeId("H"), OutPort::sub_out, NodeId("a"), InPort::sub_in, {}},
       {NodeId("a"), OutPort::sub_out, NodeId("b"), InPort::sub_in, {}},
       {NodeId("b"), OutPort::main_out, NodeId("c"), InPort::main_in, {}},
       {NodeId("c"), OutPort::sub_out, NodeId("d"), InPort::sub_in, {}},
       {NodeId("a"), OutPort::main_out, NodeId("e"), InPort::main_in, {}}});
  const std::vector<std::vector<NodeId>> expected{
      ids({"H"}),           ids({"H", "a"}),      ids({"H", "a", "b"}),
      ids({"H", "a", "c"}), ids({"H", "a", "c", "d"}), ids({"H", "e"})};
  EXPECT_EQ(layers_of(flatten_segment(g, NodeId("H"))), expected);
}

TEST(FlattenTest, MatchesParentLinkOracle) {
  gen::Generator g(5);
  for (int i = 0; i < 400; ++i) {
    const auto graph = g.graph();
    const auto tree = build_tree(graph);
    for (const auto& [id, seg] : tree.segments) {
      if (seg.decision) continue;
      EXPECT_EQ(layers_of(flatten_segment(graph, seg.head)), oracle::flatten(graph, seg.head));
      EXPECT_EQ(layers_of(seg.steps), oracle::flatten(graph, seg.head));
    }
  }
}

TEST(BuildTreeTest, LayeredSegments) {
  const auto tree = build_tree(samples::layered_document().graph);
  ASSERT_EQ(tree.segments.size(), 2u);
  EXPECT_EQ(tree.root, SegmentId(NodeId("A")));
  EXPECT_EQ(tree.segment(SegmentId(NodeId("A"))).steps.size(), 4u);
  EXPECT_EQ(tree.segment(SegmentId(NodeId("E"))).steps.size(), 1u);
  EXPECT_EQ(tree.segment(SegmentId(NodeId("A"))).kind_icon, KindTag::image);
  ASSERT_EQ(tree.children_of(tree.root).size(), 1u);
  EXPECT_EQ(tree.children_of(tree.root)[0].id, SegmentId(NodeId("E")));
  EXPECT_FALSE(tree.children_of(tree.root)[0].label);
  EXPECT_TRUE(tree.children_of(SegmentId(NodeId("E"))).empty());
  EXPECT_THROW(tree.segment(SegmentId(NodeId("B"))), GraphError);
}

TEST(BuildTreeTest, DecisionSegmentsKeepOptionOrderAndLabels) {
  const auto tree = build_tree(samples::demo_document().graph);
  const auto& choice = tree.segment(SegmentId(NodeId("choice")));
  EXPECT_TRUE(choice.decision);
  ASSERT_EQ(choice.steps.size(), 1u);
  const auto& kids = tree.children_of(choice.id);
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0].id.head(), NodeId("hill_complex"));
  EXPECT_EQ(kids[0].label, "The Hill Complex");
  EXPECT_EQ(kids[1].id.head(), NodeId("excavation"));
}

TEST(BuildTreeTest, EveryNodeOwnsExactlyOneStep) {
  gen::Generator g(6);
  for (int i = 0; i < 300; ++i) {
    const auto graph = g.graph();
    const auto tree = build_tree(graph);
    std::multiset<NodeId> owners;
    std::size_t reachable = 0;
    for (const auto& [id, seg] : tree.segments) {
      for (const auto& step : seg.steps) {
        owners.insert(step.owner());
        EXPECT_EQ(step.layers.front(), seg.head);
        std::set<NodeId> unique(step.layers.begin(), step.layers.end());
        EXPECT_EQ(unique.size(), step.layers.size());
      }
      for (const auto& child : tree.children_of(id)) {
        EXPECT_TRUE(tree.segments.count(child.id));
        EXPECT_EQ(child.label.has_value(), seg.decision);
      }
      ++reachable;
    }
    for (const auto& [id, node] : graph.nodes()) EXPECT_EQ(owners.count(id), 1u) << id;
    EXPECT_EQ(owners.size(), graph.node_count());
    EXPECT_GE(reachable, 1u);
  }
}

TEST(EnumeratePathsTest, SerialDecisionsMultiply) {
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> b(std::size_t(k), 2);
    for (;;) {
      const auto tree = build_tree(gen::serial_decisions(b));
      std::size_t expected = 1;
      for (int x : b) expected *= std::size_t(x);
      const auto paths = enumerate_paths(tree);
      EXPECT_EQ(paths.size(), expected);
      std::set<std::vector<SegmentId>> unique(paths.begin(), paths.end());
      EXPECT_EQ(unique.size(), paths.size());
      std::size_t i = 0;
      while (i < b.size() && b[i] == 3) b[i++] = 2;
      if (i == b.size()) break;
      ++b[i];
    }
  }
}

TEST(EnumeratePathsTest, LinearStoryHasOnePath) {
  const auto tree = build_tree(samples::layered_document().graph);
  const auto paths = enumerate_paths(tree);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (std::vector<SegmentId>{SegmentId(NodeId("A")), SegmentId(NodeId("E"))}));
}

TEST(EnumeratePathsTest, PathsEndAtLeavesAndStartAtRoot) {
  gen::Generator g(8);
  for (int i = 0; i < 200; ++i) {
    const auto tree = build_tree(g.graph());
    std::size_t leaves = 0;
    for (const auto& [id, seg] : tree.segments) leaves += tree.children_of(id).empty();
    const auto paths = enumerate_paths(tree);
    EXPECT_EQ(paths.size(), leaves);
    for (const auto& p : paths) {
      EXPECT_EQ(p.front(), tree.root);
      EXPECT_TRUE(tree.children_of(p.back()).empty());
    }
  }
}

}  // namespace
}  // namespace scrolly
