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

#ifndef SCROLLY_DESCRIPTOR_HPP_
#define SCROLLY_DESCRIPTOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scrolly/timeline.hpp"

namespace scrolly {

inline constexpr int kDescriptorVersion = 1;

struct DescriptorStep {
  NodeId owner;
  std::vector<NodeId> layers;
  double extent_px = 0.0;
  bool operator==(const DescriptorStep&) const = default;
};

struct DescriptorSegment {
  SegmentId id;
  KindTag head_kind = KindTag::text;
  std::vector<DescriptorStep> steps;
  bool operator==(const DescriptorSegment&) const = default;
};

struct DescriptorLayer {
  NodeKind params;
  std::optional<std::string> asset;  // bundle-relative path
  bool operator==(const DescriptorLayer&) const = default;
};

/// Contents of `story.json`: everything the browser runtime needs to evaluate
/// the timeline for any scroll position and set of decisions.
struct StoryDescriptor {
  int version = kDescriptorVersion;
  std::string title;
  TimelineConfig config;
  std::vector<DescriptorSegment> segments;
  std::map<SegmentId, std::vector<TreeChild>> tree_children;
  std::map<BoundaryKey, BoundaryTransitions> transitions;
  std::map<NodeId, DescriptorLayer> layers;
  SegmentId root;
  bool operator==(const StoryDescriptor&) const = default;
};

/// `assets` maps nodes to their rewritten asset paths.
StoryDescriptor make_descriptor(const Timeline& timeline, std::string title,
                                const std::map<NodeId, std::string>& assets = {});

nlohmann::json to_json(const StoryDescriptor& descriptor);

/// Throws Error on schema violations. Unknown top-level keys are ignored.
StoryDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json kind_to_json(const NodeKind& kind);
NodeKind kind_from_json(const nlohmann::json& j);
nlohmann::json transition_to_json(const LayerTransition& transition);
LayerTransition transition_from_json(const nlohmann::json& j);

/// Deterministic text form: sorted keys, two-space indent, trailing LF.
std::string serialize(const StoryDescriptor& descriptor);

}  // namespace scrolly

#endif  // SCROLLY_DESCRIPTOR_HPP_
