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

#include "scrolly/descriptor.hpp"

#include <utility>

namespace scrolly {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json camera_to_json(const Camera& c) {
  const auto& q = c.rotation;
  return {{"position", {c.position.x(), c.position.y(), c.position.z()}},
          {"rotation", {q.w(), q.x(), q.y(), q.z()}},
          {"zoom", c.zoom}};
}

Camera camera_from_json(const json& j) {
  Camera c;
  const auto& p = j.at("position");
  const auto& r = j.at("rotation");
  if (p.size() != 3 || r.size() != 4) throw Error("malformed camera");
  c.position = Eigen::Vector3d(p.at(0).get<double>(), p.at(1).get<double>(),
                               p.at(2).get<double>());
  c.rotation = Eigen::Quaterniond(r.at(0).get<double>(), r.at(1).get<double>(),
                                  r.at(2).get<double>(), r.at(3).get<double>());
  c.zoom = j.at("zoom").get<double>();
  return c;
}

json view_to_json(const MapView& v) {
  return {{"lat", v.lat}, {"lon", v.lon}, {"zoom", v.zoom_level}};
}

MapView view_from_json(const json& j) {
  return {j.at("lat").get<double>(), j.at("lon").get<double>(),
          j.at("zoom").get<double>()};
}

json pair_to_json(const ScalarPair& p) { return {p.from, p.to}; }

ScalarPair pair_from_json(const json& j) {
  if (j.size() != 2) throw Error("expected a [from, to] pair");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

template <typename Enum, typename Parser>
Enum enum_from(const json& j, const char* key, Parser parse) {
  const auto text = j.at(key).get<std::string>();
  if (auto v = parse(text)) return *v;
  throw Error("invalid value '" + text + "' for '" + key + "'");
}

std::pair<NodeId, NodeId> split_boundary(const std::string& key) {
  const auto arrow = key.find("->");
  if (arrow == std::string::npos) throw Error("malformed boundary key '" + key + "'");
  return {NodeId(key.substr(0, arrow)), NodeId(key.substr(arrow + 2))};
}

}  // namespace

json kind_to_json(const NodeKind& kind) {
  json j = std::visit(
      overloaded{
          [](const Text& k) -> json {
            return {{"content", k.content},
                    {"hAlign", to_string(k.h_align)},
                    {"vAlign", to_string(k.v_align)}};
          },
          [](const Image& k) -> json {
            return {{"src", k.src}, {"position", k.position}, {"size", k.size}};
          },
          [](const Video& k) -> json {
            return {{"src", k.src}, {"position", k.position}, {"size", k.size}};
          },
          [](const Audio& k) -> json { return {{"src", k.src}}; },
          [](const Map& k) -> json {
            return {{"lat", k.lat}, {"lon", k.lon}, {"zoom", k.zoom_level}};
          },
          [](const Volume& k) -> json {
            return {{"src", k.src},
                    {"mode", to_string(k.mode)},
                    {"iso", k.iso_value},
                    {"intensityLo", k.intensity_lo},
                    {"intensityHi", k.intensity_hi},
                    {"camera", camera_to_json(k.camera)}};
          },
          [](const Slice& k) -> json {
            return {{"src", k.src},
                    {"axis", to_string(k.axis)},
                    {"index", k.index},
                    {"camera", camera_to_json(k.camera)}};
          },
          [](const Surface& k) -> json {
            return {{"model", k.model_ref}, {"camera", camera_to_json(k.camera)}};
          },
          [](const Decision& k) -> json { return {{"prompt", k.prompt}}; }},
      kind);
  j["kind"] = kind_name(kind_tag(kind));
  return j;
}

NodeKind kind_from_json(const json& j) {
  const auto name = j.at("kind").get<std::string>();
  const auto tag = kind_from_name(name);
  if (!tag) throw Error("unknown node kind '" + name + "'");
  switch (*tag) {
    case KindTag::text:
      return Text{j.at("content").get<std::string>(),
                  enum_from<HAlign>(j, "hAlign", parse_h_align),
                  enum_from<VAlign>(j, "vAlign", parse_v_align)};
    case KindTag::image:
      return Image{j.at("src").get<std::string>(), j.at("position").get<std::string>(),
                   j.at("size").get<std::string>()};
    case KindTag::video:
      return Video{j.at("src").get<std::string>(), j.at("position").get<std::string>(),
                   j.at("size").get<std::string>()};
    case KindTag::audio:
      return Audio{j.at("src").get<std::string>()};
    case KindTag::map:
      return Map{j.at("lat").get<double>(), j.at("lon").get<double>(),
                 j.at("zoom").get<double>()};
    case KindTag::volume:
      return Volume{j.at("src").get<std::string>(),
                    enum_from<VolumeMode>(j, "mode", parse_volume_mode),
                    j.at("iso").get<double>(), j.at("intensityLo").get<double>(),
                    j.at("intensityHi").get<double>(), camera_from_json(j.at("camera"))};
    case KindTag::slice:
      return Slice{j.at("src").get<std::string>(), enum_from<Axis>(j, "axis", parse_axis),
                   j.at("index").get<std::int64_t>(), camera_from_json(j.at("camera"))};
    case KindTag::surface:
      return Surface{j.at("model").get<std::string>(), camera_from_json(j.at("camera"))};
    case KindTag::decision:
      return Decision{j.at("prompt").get<std::string>()};
  }
  throw Error("unknown node kind '" + name + "'");
}

json transition_to_json(const LayerTransition& transition) {
  json j = std::visit(
      overloaded{
          [](const Crossfade&) -> json { return json::object(); },
          [](const VideoTrigger&) -> json { return json::object(); },
          [](const MapFly& s) -> json {
            return {{"from", view_to_json(s.from)}, {"to", view_to_json(s.to)}};
          },
          [](const MapEnter& s) -> json {
            return {{"from", view_to_json(s.from)}, {"to", view_to_json(s.to)}};
          },
          [](const SurfaceBlend& s) -> json {
            return {{"from", camera_to_json(s.from)}, {"to", camera_to_json(s.to)}};
          },
          [](const CameraBlend& s) -> json {
            json out{{"from", camera_to_json(s.from)}, {"to", camera_to_json(s.to)}};
            if (const auto* v = std::get_if<VolumeBlendExtra>(&s.extra)) {
              out["iso"] = pair_to_json(v->iso);
              out["intensityLo"] = pair_to_json(v->intensity_lo);
              out["intensityHi"] = pair_to_json(v->intensity_hi);
            } else {
              const auto& sl = std::get<SliceBlendExtra>(s.extra);
              out["sliceIndex"] = {sl.from, sl.to};
            }
            return out;
          }},
      transition.spec);
  j["role"] = to_string(transition.role);
  j["kind"] = spec_name(transition.spec);
  return j;
}

LayerTransition transition_from_json(const json& j) {
  LayerTransition out;
  out.role = enum_from<LayerRole>(j, "role", parse_layer_role);
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "crossfade") {
    out.spec = Crossfade{};
  } else if (kind == "videoTrigger") {
    out.spec = VideoTrigger{};
  } else if (kind == "mapFly") {
    out.spec = MapFly{view_from_json(j.at("from")), view_from_json(j.at("to"))};
  } else if (kind == "mapEnter") {
    out.spec = MapEnter{view_from_json(j.at("from")), view_from_json(j.at("to"))};
  } else if (kind == "surfaceBlend") {
    out.spec = SurfaceBlend{camera_from_json(j.at("from")), camera_from_json(j.at("to"))};
  } else if (kind == "cameraBlend") {
    CameraBlend blend{camera_from_json(j.at("from")), camera_from_json(j.at("to")), {}};
    if (j.contains("sliceIndex")) {
      const auto& p = j.at("sliceIndex");
      if (p.size() != 2) throw Error("expected a [from, to] pair");
      blend.extra = SliceBlendExtra{p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()};
    } else {
      blend.extra = VolumeBlendExtra{pair_from_json(j.at("iso")),
                                     pair_from_json(j.at("intensityLo")),
                                     pair_from_json(j.at("intensityHi"))};
    }
    out.spec = blend;
  } else {
    throw Error("unknown transition kind '" + kind + "'");
  }
  return out;
}

StoryDescriptor make_descriptor(const Timeline& timeline, std::string title,
                                const std::map<NodeId, std::string>& assets) {
  StoryDescriptor d;
  d.title = std::move(title);
  d.config = timeline.config;
  d.root = timeline.tree.root;
  for (const auto& [id, segment] : timeline.tree.segments) {
    DescriptorSegment out{id, segment.kind_icon, {}};
    for (const auto& step : segment.steps) {
      out.steps.push_back({step.owner(), step.layers, timeline.extent_of(step.owner())});
      for (const auto& layer : step.layers) {
        if (d.layers.count(layer) != 0) continue;
        DescriptorLayer entry{timeline.tree.graph.node(layer).kind, std::nullopt};
        if (auto it = assets.find(layer); it != assets.end()) entry.asset = it->second;
        d.layers.emplace(layer, std::move(entry));
      }
    }
    d.segments.push_back(std::move(out));
  }
  d.tree_children = timeline.tree.children;
  d.transitions = timeline.boundaries;
  return d;
}

json to_json(const StoryDescriptor& d) {
  json segments = json::array();
  for (const auto& seg : d.segments) {
    json steps = json::array();
    for (const auto& step : seg.steps) {
      json layers = json::array();
      for (const auto& l : step.layers) layers.push_back(l.str());
      steps.push_back({{"owner", step.owner.str()},
                       {"layers", std::move(layers)},
                       {"extentPx", step.extent_px}});
    }
    segments.push_back({{"id", seg.id.str()},
                        {"headKind", kind_name(seg.head_kind)},
                        {"steps", std::move(steps)}});
  }
  json children = json::object();
  for (const auto& [id, list] : d.tree_children) {
    json arr = json::array();
    for (const auto& c : list) {
      json entry{{"id", c.id.str()}};
      entry["label"] = c.label ? json(*c.label) : json(nullptr);
      arr.push_back(std::move(entry));
    }
    children[id.str()] = std::move(arr);
  }
  json transitions = json::object();
  for (const auto& [key, layers] : d.transitions) {
    json per_layer = json::object();
    for (const auto& [layer, t] : layers) per_layer[layer.str()] = transition_to_json(t);
    transitions[boundary_key_string(key)] = std::move(per_layer);
  }
  json layers = json::object();
  for (const auto& [id, layer] : d.layers) {
    json entry = kind_to_json(layer.params);
    entry["asset"] = layer.asset ? json(*layer.asset) : json(nullptr);
    layers[id.str()] = std::move(entry);
  }
  return {{"version", d.version},
          {"title", d.title},
          {"config",
           {{"nodeExtentPx", d.config.node_extent_px},
            {"transitionWindowPx", d.config.transition_window_px},
            {"easing", to_string(d.config.easing)}}},
          {"segments", std::move(segments)},
          {"treeChildren", std::move(children)},
          {"transitions", std::move(transitions)},
          {"layers", std::move(layers)},
          {"root", d.root.str()}};
}

StoryDescriptor descriptor_from_json(const json& j) {
  try {
    StoryDescriptor d;
    d.version = j.at("version").get<int>();
    if (d.version != kDescriptorVersion) {
      throw Error("unsupported descriptor version " + std::to_string(d.version));
    }
    d.title = j.at("title").get<std::string>();
    const auto& cfg = j.at("config");
    d.config.node_extent_px = cfg.at("nodeExtentPx").get<double>();
    d.config.transition_window_px = cfg.at("transitionWindowPx").get<double>();
    d.config.easing = enum_from<Easing>(cfg, "easing", parse_easing);
    for (const auto& seg : j.at("segments")) {
      DescriptorSegment out;
      out.id = SegmentId(NodeId(seg.at("id").get<std::string>()));
      const auto head = seg.at("headKind").get<std::string>();
      const auto tag = kind_from_name(head);
      if (!tag) throw Error("unknown head kind '" + head + "'");
      out.head_kind = *tag;
      for (const auto& step : seg.at("steps")) {
        DescriptorStep s;
        s.owner = NodeId(step.at("owner").get<std::string>());
        for (const auto& l : step.at("layers")) s.layers.emplace_back(l.get<std::string>());
        s.extent_px = step.at("extentPx").get<double>();
        out.steps.push_back(std::move(s));
      }
      d.segments.push_back(std::move(out));
    }
    for (const auto& [id, list] : j.at("treeChildren").items()) {
      auto& children = d.tree_children[SegmentId(NodeId(id))];
      for (const auto& c : list) {
        TreeChild child{SegmentId(NodeId(c.at("id").get<std::string>())), std::nullopt};
        if (c.contains("label") && !c.at("label").is_null()) {
          child.label = c.at("label").get<std::string>();
        }
        children.push_back(std::move(child));
      }
    }
    for (const auto& [key, layers] : j.at("transitions").items()) {
      auto& out = d.transitions[split_boundary(key)];
      for (const auto& [layer, t] : layers.items()) {
        out.emplace(NodeId(layer), transition_from_json(t));
      }
    }
    for (const auto& [id, entry] : j.at("layers").items()) {
      DescriptorLayer layer{kind_from_json(entry), std::nullopt};
      if (entry.contains("asset") && !entry.at("asset").is_null()) {
        layer.asset = entry.at("asset").get<std::string>();
      }
      d.layers.emplace(NodeId(id), std::move(layer));
    }
    d.root = SegmentId(NodeId(j.at("root").get<std::string>()));
    return d;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed story descriptor: ") + e.what());
  }
}

std::string serialize(const StoryDescriptor& descriptor) {
  return to_json(descriptor).dump(2) + "\n";
}

}  // namespace scrolly
