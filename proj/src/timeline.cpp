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

#include "scrolly/timeline.hpp"

#include "scrolly/story_xml.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace scrolly {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool contains(const std::vector<NodeId>& layers, const NodeId& id) {
  return std::find(layers.begin(), layers.end(), id) != layers.end();
}

bool is_continuous(KindTag tag) {
  return tag == KindTag::volume || tag == KindTag::slice ||
         tag == KindTag::surface || tag == KindTag::map;
}

bool blendable(const NodeKind& a, const NodeKind& b) {
  const KindTag tag = kind_tag(a);
  return tag == kind_tag(b) && is_continuous(tag) &&
         data_source(a) == data_source(b);
}

TransitionSpec make_blend(const NodeKind& a, const NodeKind& b) {
  if (const auto* v0 = std::get_if<Volume>(&a)) {
    const auto& v1 = std::get<Volume>(b);
    return CameraBlend{v0->camera, v1.camera,
                       VolumeBlendExtra{{v0->iso_value, v1.iso_value},
                                        {v0->intensity_lo, v1.intensity_lo},
                                        {v0->intensity_hi, v1.intensity_hi}}};
  }
  if (const auto* s0 = std::get_if<Slice>(&a)) {
    const auto& s1 = std::get<Slice>(b);
    return CameraBlend{s0->camera, s1.camera, SliceBlendExtra{s0->index, s1.index}};
  }
  if (const auto* f0 = std::get_if<Surface>(&a)) {
    return SurfaceBlend{f0->camera, std::get<Surface>(b).camera};
  }
  return MapFly{map_view_of(std::get<Map>(a)), map_view_of(std::get<Map>(b))};
}

MapView map_enter_start(const Map& target) {
  const double z = target.zoom_level;
  return {target.lat, target.lon, std::max(z - 4.0, std::min(z, 1.0))};
}

struct HookedStep {
  const Step* step;
  SegmentId segment;
  std::size_t segment_index;
  double offset;
  double extent;
};

}  // namespace

std::string_view to_string(Easing e) {
  return e == Easing::linear ? "linear" : "smoothstep";
}

std::optional<Easing> parse_easing(std::string_view s) {
  if (s == "linear") return Easing::linear;
  if (s == "smoothstep") return Easing::smoothstep;
  return std::nullopt;
}

void TimelineConfig::validate() const {
  if (!(std::isfinite(node_extent_px) && node_extent_px > 0.0)) {
    throw Error("node extent must be a positive number of pixels");
  }
  if (!(std::isfinite(transition_window_px) && transition_window_px > 0.0)) {
    throw Error("transition window must be a positive number of pixels");
  }
  if (transition_window_px > node_extent_px) {
    throw Error("transition window (" + std::to_string(transition_window_px) +
                " px) exceeds node extent (" + std::to_string(node_extent_px) +
                " px)");
  }
}

double apply_easing(Easing easing, double t) {
  t = std::clamp(t, 0.0, 1.0);
  if (easing == Easing::smoothstep) return t * t * (3.0 - 2.0 * t);
  return t;
}

std::string_view spec_name(const TransitionSpec& spec) {
  return std::visit(overloaded{[](const Crossfade&) { return "crossfade"; },
                               [](const MapFly&) { return "mapFly"; },
                               [](const MapEnter&) { return "mapEnter"; },
                               [](const CameraBlend&) { return "cameraBlend"; },
                               [](const SurfaceBlend&) { return "surfaceBlend"; },
                               [](const VideoTrigger&) { return "videoTrigger"; }},
                    spec);
}

std::string_view to_string(LayerRole role) {
  switch (role) {
    case LayerRole::fade_in: return "fadeIn";
    case LayerRole::fade_out: return "fadeOut";
    case LayerRole::blend_in: return "blendIn";
    case LayerRole::blend_out: return "blendOut";
  }
  return "";
}

std::optional<LayerRole> parse_layer_role(std::string_view s) {
  for (auto r : {LayerRole::fade_in, LayerRole::fade_out, LayerRole::blend_in,
                 LayerRole::blend_out}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::string boundary_key_string(const BoundaryKey& key) {
  return key.first.str() + "->" + key.second.str();
}

BoundaryTransitions classify_transition(const Step& prev, const Step& next,
                                        const StoryGraph& graph) {
  BoundaryTransitions out;
  const NodeId& exiting = prev.owner();
  const NodeId& entering = next.owner();
  const NodeKind& exiting_kind = graph.node(exiting).kind;

  bool blended = false;
  if (!contains(next.layers, exiting) && !contains(prev.layers, entering)) {
    const NodeKind& entering_kind = graph.node(entering).kind;
    if (blendable(exiting_kind, entering_kind)) {
      const TransitionSpec spec = make_blend(exiting_kind, entering_kind);
      out[exiting] = {LayerRole::blend_out, spec};
      out[entering] = {LayerRole::blend_in, spec};
      blended = true;
    }
  }
  for (const auto& layer : prev.layers) {
    if (contains(next.layers, layer) || (blended && layer == exiting)) continue;
    out[layer] = {LayerRole::fade_out, Crossfade{}};
  }
  for (const auto& layer : next.layers) {
    if (contains(prev.layers, layer) || (blended && layer == entering)) continue;
    const NodeKind& kind = graph.node(layer).kind;
    TransitionSpec spec = Crossfade{};
    if (const auto* map = std::get_if<Map>(&kind)) {
      if (!std::holds_alternative<Map>(exiting_kind)) {
        spec = MapEnter{map_enter_start(*map), map_view_of(*map)};
      }
    } else if (std::holds_alternative<Video>(kind) ||
               std::holds_alternative<Audio>(kind)) {
      spec = VideoTrigger{};
    }
    out[layer] = {LayerRole::fade_in, spec};
  }
  return out;
}

NodeKind interpolate_params(const NodeKind& p0, const NodeKind& p1, double t) {
  if (kind_tag(p0) != kind_tag(p1)) {
    throw Error("kind mismatch: cannot blend " +
                std::string(kind_name(kind_tag(p0))) + " into " +
                std::string(kind_name(kind_tag(p1))));
  }
  if (data_source(p0) != data_source(p1)) {
    throw Error("cannot blend parameters across different data sources");
  }
  t = std::clamp(t, 0.0, 1.0);
  const bool late = t >= 0.5;
  if (const auto* v0 = std::get_if<Volume>(&p0)) {
    const auto& v1 = std::get<Volume>(p1);
    Volume out = late ? v1 : *v0;
    out.iso_value = lerp(v0->iso_value, v1.iso_value, t);
    out.intensity_lo = lerp(v0->intensity_lo, v1.intensity_lo, t);
    out.intensity_hi = std::max(out.intensity_lo,
                                lerp(v0->intensity_hi, v1.intensity_hi, t));
    out.camera = interpolate_camera(v0->camera, v1.camera, t);
    return out;
  }
  if (const auto* s0 = std::get_if<Slice>(&p0)) {
    const auto& s1 = std::get<Slice>(p1);
    Slice out = late ? s1 : *s0;
    out.index = interpolate_index(s0->index, s1.index, t);
    out.camera = interpolate_camera(s0->camera, s1.camera, t);
    return out;
  }
  if (const auto* f0 = std::get_if<Surface>(&p0)) {
    Surface out = *f0;
    out.camera = interpolate_camera(f0->camera, std::get<Surface>(p1).camera, t);
    return out;
  }
  if (const auto* m0 = std::get_if<Map>(&p0)) {
    const MapView v = map_flight(map_view_of(*m0), map_view_of(std::get<Map>(p1)), t);
    return Map{v.lat, v.lon, v.zoom_level};
  }
  throw Error(std::string(kind_name(kind_tag(p0))) +
              " parameters are not interpolable");
}

// ---------------------------------------------------------------------------

double Timeline::extent_of(const NodeId& owner) const {
  auto it = extents.find(owner);
  if (it == extents.end()) throw Error("no step owned by '" + owner.str() + "'");
  return it->second;
}

double Timeline::segment_extent(const SegmentId& id) const {
  double sum = 0.0;
  for (const auto& step : tree.segment(id).steps) sum += extent_of(step.owner());
  return sum;
}

Timeline plan(const StoryTree& tree, const TimelineConfig& config) {
  config.validate();
  Timeline tl;
  tl.tree = tree;
  tl.config = config;
  const StoryGraph& graph = tree.graph;

  for (const auto& [id, segment] : tree.segments) {
    for (const auto& step : segment.steps) {
      const StoryNode& node = graph.node(step.owner());
      const double extent = node.extent_override.value_or(config.node_extent_px);
      if (extent < config.transition_window_px) {
        throw Error("node '" + node.id.str() + "': extent " +
                    format_number(extent) + " px is shorter than the transition "
                    "window of " + format_number(config.transition_window_px) +
                    " px");
      }
      tl.extents[step.owner()] = extent;
    }
    for (std::size_t i = 1; i < segment.steps.size(); ++i) {
      const Step& a = segment.steps[i - 1];
      const Step& b = segment.steps[i];
      tl.boundaries[{a.owner(), b.owner()}] = classify_transition(a, b, graph);
    }
  }

  std::vector<std::pair<SegmentId, double>> work{{tree.root, 0.0}};
  while (!work.empty()) {
    const auto [id, offset] = work.back();
    work.pop_back();
    tl.segment_offsets[id] = offset;
    const StorySegment& segment = tree.segment(id);
    const double end = offset + tl.segment_extent(id);
    if (segment.decision) {
      tl.decision_clamps[id] = end - config.transition_window_px / 2.0;
    }
    for (const auto& child : tree.children_of(id)) {
      const Step& a = segment.steps.back();
      const Step& b = tree.segment(child.id).steps.front();
      tl.boundaries[{a.owner(), b.owner()}] = classify_transition(a, b, graph);
      work.emplace_back(child.id, end);
    }
  }
  return tl;
}

std::vector<SegmentId> hooked_path(const StoryTree& tree,
                                   const Decisions& decisions) {
  std::vector<SegmentId> path{tree.root};
  while (true) {
    const SegmentId& current = path.back();
    const auto& children = tree.children_of(current);
    if (children.empty()) break;
    if (tree.segment(current).decision) {
      auto it = decisions.find(current);
      if (it == decisions.end()) break;
      if (it->second >= children.size()) {
        throw Error("decision index " + std::to_string(it->second) +
                    " out of range for segment '" + current.str() + "'");
      }
      path.push_back(children[it->second].id);
    } else {
      path.push_back(children.front().id);
    }
  }
  return path;
}

double path_height(const Timeline& timeline, const std::vector<SegmentId>& path) {
  double sum = 0.0;
  for (const auto& id : path) sum += timeline.segment_extent(id);
  return sum;
}

RenderState eval(const Timeline& timeline, double scroll_px,
                 const Decisions& decisions) {
  if (!std::isfinite(scroll_px) || scroll_px < 0.0) {
    throw Error("scroll position must be a nonnegative number");
  }
  const StoryTree& tree = timeline.tree;
  for (const auto& [id, index] : decisions) {
    auto it = tree.segments.find(id);
    if (it == tree.segments.end() || !it->second.decision) {
      throw Error("'" + id.str() + "' is not a decision segment");
    }
    if (index >= tree.children_of(id).size()) {
      throw Error("decision index " + std::to_string(index) +
                  " out of range for segment '" + id.str() + "'");
    }
  }

  const auto path = hooked_path(tree, decisions);
  std::vector<HookedStep> steps;
  double total = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (const auto& step : tree.segment(path[i]).steps) {
      const double extent = timeline.extent_of(step.owner());
      steps.push_back({&step, path[i], i, total, extent});
      total += extent;
    }
  }

  RenderState state;
  state.total_height = total;
  double s = scroll_px;
  const SegmentId& last = path.back();
  if (tree.segment(last).decision && !tree.children_of(last).empty()) {
    const double clamp = timeline.decision_clamps.at(last);
    state.clamp_max_scroll = clamp;
    if (s >= clamp) {
      ActiveDecision active{last, {}};
      for (const auto& child : tree.children_of(last)) {
        active.options.push_back(child.label.value_or(child.id.str()));
      }
      state.active_decision = std::move(active);
      s = clamp;
    }
  }
  s = std::min(s, total);
  state.scroll_px = s;

  // Step containing s; s == total belongs to the last step.
  auto it = std::upper_bound(steps.begin(), steps.end(), s,
                             [](double v, const HookedStep& h) { return v < h.offset; });
  const std::size_t i = static_cast<std::size_t>(std::distance(steps.begin(), it)) - 1;
  const HookedStep& here = steps[i];

  const double seg_offset = timeline.segment_offsets.at(here.segment);
  state.progress = {here.segment, here.segment_index,
                    (s - seg_offset) / timeline.segment_extent(here.segment)};

  const double window = timeline.config.transition_window_px;
  const double half = window / 2.0;
  const StoryGraph& graph = tree.graph;

  // Boundary whose window contains s, as the index of the step after it.
  std::optional<std::size_t> boundary;
  if (i >= 1 && s < here.offset + half) {
    boundary = i;
  } else if (i + 1 < steps.size() && s >= steps[i + 1].offset - half) {
    boundary = i + 1;
  }

  if (!boundary) {
    for (const auto& layer : here.step->layers) {
      state.visible.push_back({layer, 1.0, graph.node(layer).kind});
    }
    return state;
  }

  const Step& prev = *steps[*boundary - 1].step;
  const Step& next = *steps[*boundary].step;
  const double start = steps[*boundary].offset - half;
  const double t = apply_easing(timeline.config.easing, (s - start) / window);
  const auto& transitions = timeline.boundaries.at({prev.owner(), next.owner()});

  for (const auto& layer : prev.layers) {
    if (contains(next.layers, layer)) {
      state.visible.push_back({layer, 1.0, graph.node(layer).kind});
      continue;
    }
    const LayerTransition& lt = transitions.at(layer);
    if (lt.role == LayerRole::fade_out && 1.0 - t > 0.0) {
      state.visible.push_back({layer, 1.0 - t, graph.node(layer).kind});
    }
  }
  for (const auto& layer : next.layers) {
    if (contains(prev.layers, layer)) continue;
    const LayerTransition& lt = transitions.at(layer);
    const NodeKind& own = graph.node(layer).kind;
    if (lt.role == LayerRole::blend_in) {
      state.visible.push_back(
          {layer, 1.0, interpolate_params(graph.node(prev.owner()).kind, own, t)});
    } else if (t > 0.0) {
      NodeKind params = own;
      if (const auto* enter = std::get_if<MapEnter>(&lt.spec)) {
        const MapView v = map_flight(enter->from, enter->to, t);
        params = Map{v.lat, v.lon, v.zoom_level};
      }
      state.visible.push_back({layer, t, std::move(params)});
    }
  }
  return state;
}

}  // namespace scrolly
