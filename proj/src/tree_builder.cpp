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

#include "scrolly/tree_builder.hpp"

#include <functional>

namespace scrolly {

namespace {

void require_valid(const StoryGraph& graph) {
  auto diagnostics = validate(graph);
  if (count_errors(diagnostics) > 0) throw GraphError(std::move(diagnostics));
}

void visit(const StoryGraph& graph, const NodeId& node,
           std::vector<NodeId>& stack, int depth, std::vector<Step>& out) {
  stack.push_back(node);
  out.push_back(Step{stack});
  if (const Edge* sub = graph.sub_successor(node)) {
    visit(graph, sub->to, stack, depth + 1, out);
  }
  stack.pop_back();
  if (depth >= 1) {
    if (const Edge* next = graph.main_successor(node)) {
      visit(graph, next->to, stack, depth, out);
    }
  }
}

}  // namespace

const StorySegment& StoryTree::segment(const SegmentId& id) const {
  auto it = segments.find(id);
  if (it == segments.end()) throw GraphError("unknown segment '" + id.str() + "'");
  return it->second;
}

const std::vector<TreeChild>& StoryTree::children_of(const SegmentId& id) const {
  static const std::vector<TreeChild> kNone;
  auto it = children.find(id);
  return it == children.end() ? kNone : it->second;
}

std::vector<Step> flatten_segment(const StoryGraph& graph, const NodeId& head) {
  require_valid(graph);
  const StoryNode& node = graph.node(head);
  if (std::holds_alternative<Decision>(node.kind)) {
    throw GraphError("cannot flatten decision node '" + head.str() + "'");
  }
  if (const auto in = graph.in_edges(head);
      !in.empty() && in.front()->to_port == InPort::sub_in) {
    throw GraphError("node '" + head.str() + "' is not on the main chain");
  }
  std::vector<Step> steps;
  std::vector<NodeId> stack;
  visit(graph, head, stack, 0, steps);
  return steps;
}

StoryTree build_tree(const StoryGraph& graph) {
  require_valid(graph);
  StoryTree tree;
  tree.graph = graph;
  tree.root = SegmentId(root(graph));

  std::vector<NodeId> work{tree.root.head()};
  while (!work.empty()) {
    const NodeId head = work.back();
    work.pop_back();
    const StoryNode& node = graph.node(head);
    StorySegment segment;
    segment.id = SegmentId(head);
    segment.head = head;
    segment.kind_icon = kind_tag(node.kind);
    segment.decision = std::holds_alternative<Decision>(node.kind);

    std::vector<TreeChild> children;
    if (segment.decision) {
      segment.steps.push_back(Step{{head}});
      for (const Edge* e : graph.out_edges(head, OutPort::main_out)) {
        children.push_back(TreeChild{SegmentId(e->to), e->label});
      }
    } else {
      std::vector<NodeId> stack;
      visit(graph, head, stack, 0, segment.steps);
      if (const Edge* next = graph.main_successor(head)) {
        children.push_back(TreeChild{SegmentId(next->to), std::nullopt});
      }
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      work.push_back(it->id.head());
    }
    if (!children.empty()) tree.children.emplace(segment.id, std::move(children));
    tree.segments.emplace(segment.id, std::move(segment));
  }
  return tree;
}

std::vector<std::vector<SegmentId>> enumerate_paths(const StoryTree& tree) {
  std::vector<std::vector<SegmentId>> paths;
  std::vector<SegmentId> prefix;
  std::function<void(const SegmentId&)> walk = [&](const SegmentId& id) {
    prefix.push_back(id);
    const auto& children = tree.children_of(id);
    if (children.empty()) {
      paths.push_back(prefix);
    } else {
      for (const auto& child : children) walk(child.id);
    }
    prefix.pop_back();
  };
  walk(tree.root);
  return paths;
}

}  // namespace scrolly
