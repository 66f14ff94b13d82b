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

#ifndef SCROLLY_TREE_BUILDER_HPP_
#define SCROLLY_TREE_BUILDER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scrolly/story_model.hpp"

namespace scrolly {

/// A segment is named after its head node.
class SegmentId {
 public:
  SegmentId() = default;
  explicit SegmentId(NodeId head) : head_(std::move(head)) {}

  const NodeId& head() const { return head_; }
  const std::string& str() const { return head_.str(); }

  auto operator<=>(const SegmentId&) const = default;

 private:
  NodeId head_;
};

/// One visibility state: the layers shown together, bottom first. The last
/// layer is the node whose traversal the step represents.
struct Step {
  std::vector<NodeId> layers;

  const NodeId& owner() const { return layers.back(); }
  bool operator==(const Step&) const = default;
};

struct StorySegment {
  SegmentId id;
  NodeId head;
  std::vector<Step> steps;
  KindTag kind_icon = KindTag::text;
  bool decision = false;
};

struct TreeChild {
  SegmentId id;
  std::optional<std::string> label;
  bool operator==(const TreeChild&) const = default;
};

/// Compiled branching structure. Holds a copy of the graph so later passes
/// can resolve node parameters.
struct StoryTree {
  StoryGraph graph;
  std::map<SegmentId, StorySegment> segments;
  SegmentId root;
  std::map<SegmentId, std::vector<TreeChild>> children;

  const StorySegment& segment(const SegmentId& id) const;
  const std::vector<TreeChild>& children_of(const SegmentId& id) const;
};

/// Layer stacks produced by walking a main-chain node's sub-path: each node
/// is shown over its sub-path ancestors; a main successor inside the sub-path
/// replaces its predecessor at the same depth.
std::vector<Step> flatten_segment(const StoryGraph& graph, const NodeId& head);

StoryTree build_tree(const StoryGraph& graph);

/// Every root-to-leaf segment path, depth first in option order.
std::vector<std::vector<SegmentId>> enumerate_paths(const StoryTree& tree);

}  // namespace scrolly

#endif  // SCROLLY_TREE_BUILDER_HPP_
