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

#ifndef SCROLLY_TIMELINE_HPP_
#define SCROLLY_TIMELINE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scrolly/interpolate.hpp"
#include "scrolly/story_model.hpp"
#include "scrolly/tree_builder.hpp"

namespace scrolly {

enum class Easing { linear, smoothstep };

std::string_view to_string(Easing e);
std::optional<Easing> parse_easing(std::string_view s);

struct TimelineConfig {
  double node_extent_px = 3000.0;
  double transition_window_px = 1000.0;
  Easing easing = Easing::linear;

  /// Throws Error unless both sizes are positive and window <= extent.
  void validate() const;
  bool operator==(const TimelineConfig&) const = default;
};

double apply_easing(Easing easing, double t);

// ---------------------------------------------------------------------------
// Transition specs

struct Crossfade {
  bool operator==(const Crossfade&) const = default;
};

struct MapFly {
  MapView from, to;
  bool operator==(const MapFly&) const = default;
};

/// Fade in while zooming from far out onto the target.
struct MapEnter {
  MapView from, to;
  bool operator==(const MapEnter&) const = default;
};

struct ScalarPair {
  double from = 0.0, to = 0.0;
  bool operator==(const ScalarPair&) const = default;
};

struct VolumeBlendExtra {
  ScalarPair iso, intensity_lo, intensity_hi;
  bool operator==(const VolumeBlendExtra&) const = default;
};

struct SliceBlendExtra {
  std::int64_t from = 0, to = 0;
  bool operator==(const SliceBlendExtra&) const = default;
};

/// Volume or slice camera move plus parameter blend on the same data.
struct CameraBlend {
  Camera from, to;
  std::variant<VolumeBlendExtra, SliceBlendExtra> extra;
  bool operator==(const CameraBlend&) const = default;
};

struct SurfaceBlend {
  Camera from, to;
  bool operator==(const SurfaceBlend&) const = default;
};

/// Media playback started by scrolling; used for video and audio layers.
struct VideoTrigger {
  bool operator==(const VideoTrigger&) const = default;
};

using TransitionSpec = std::variant<Crossfade, MapFly, MapEnter, CameraBlend,
                                    SurfaceBlend, VideoTrigger>;

std::string_view spec_name(const TransitionSpec& spec);

enum class LayerRole {
  fade_in,
  fade_out,
  /// Entering owner carrying a blend/fly spec; fully opaque in the window.
  blend_in,
  /// Exiting owner absorbed by the matching blend_in; hidden in the window.
  blend_out,
};

std::string_view to_string(LayerRole role);
std::optional<LayerRole> parse_layer_role(std::string_view s);

struct LayerTransition {
  LayerRole role = LayerRole::fade_in;
  TransitionSpec spec = Crossfade{};
  bool operator==(const LayerTransition&) const = default;
};

/// Layers present on both sides of a boundary have no entry.
using BoundaryTransitions = std::map<NodeId, LayerTransition>;

BoundaryTransitions classify_transition(const Step& prev, const Step& next,
                                        const StoryGraph& graph);

/// Blends node parameters of the same kind and data source.
NodeKind interpolate_params(const NodeKind& p0, const NodeKind& p1, double t);

// ---------------------------------------------------------------------------
// Timeline

using BoundaryKey = std::pair<NodeId, NodeId>;  // (prev owner, next owner)

std::string boundary_key_string(const BoundaryKey& key);

struct Timeline {
  StoryTree tree;
  TimelineConfig config;
  std::map<NodeId, double> extents;  // per step owner
  std::map<SegmentId, double> segment_offsets;
  std::map<BoundaryKey, BoundaryTransitions> boundaries;
  std::map<SegmentId, double> decision_clamps;

  double extent_of(const NodeId& owner) const;
  double segment_extent(const SegmentId& id) const;
};

Timeline plan(const StoryTree& tree, const TimelineConfig& config = {});

/// Chosen child index per decision segment.
using Decisions = std::map<SegmentId, std::size_t>;

/// Segments from the root following `decisions`; ends at a leaf or at the
/// first decision without a choice.
std::vector<SegmentId> hooked_path(const StoryTree& tree,
                                   const Decisions& decisions);

struct VisibleLayer {
  NodeId id;
  double opacity = 1.0;
  NodeKind params;
  bool operator==(const VisibleLayer&) const = default;
};

struct ActiveDecision {
  SegmentId segment;
  std::vector<std::string> options;
  bool operator==(const ActiveDecision&) const = default;
};

struct Progress {
  SegmentId segment;
  std::size_t index = 0;  // position on the hooked path
  double fraction = 0.0;
  bool operator==(const Progress&) const = default;
};

struct RenderState {
  std::vector<VisibleLayer> visible;  // bottom first
  std::optional<ActiveDecision> active_decision;
  std::optional<double> clamp_max_scroll;
  double total_height = 0.0;
  double scroll_px = 0.0;  // after clamping
  Progress progress;
  bool operator==(const RenderState&) const = default;
};

/// Pure function of (scroll position, decisions).
RenderState eval(const Timeline& timeline, double scroll_px,
                 const Decisions& decisions = {});

/// Sum of step extents along a segment path.
double path_height(const Timeline& timeline, const std::vector<SegmentId>& path);

}  // namespace scrolly

#endif  // SCROLLY_TIMELINE_HPP_
