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

#include "scrolly/story_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace scrolly {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string quoted(const NodeId& id) { return "'" + id.str() + "'"; }

std::string number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Decodes one UTF-8 sequence starting at s[i]; returns the code point and
// advances i, or returns -1 for malformed input.
long decode_utf8(std::string_view s, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  int extra = 0;
  long cp = 0;
  long min = 0;
  if (lead < 0x80) {
    ++i;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    return -1;
  }
  if (i + extra >= s.size()) return -1;
  for (int k = 1; k <= extra; ++k) {
    const auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xC0) != 0x80) return -1;
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return -1;
  i += extra + 1;
  return cp;
}

void check_camera(const Camera& camera, std::vector<std::string>& out) {
  if (!camera.position.allFinite()) out.push_back("camera position not finite");
  if (!camera.rotation.coeffs().allFinite() ||
      std::abs(camera.rotation.norm() - 1.0) > 1e-9) {
    out.push_back("camera rotation is not a unit quaternion");
  }
  if (!std::isfinite(camera.zoom) || camera.zoom <= 0.0) {
    out.push_back("camera zoom must be positive");
  }
}

void check_text(std::string_view field, std::string_view value,
                std::vector<std::string>& out) {
  if (!is_representable_text(value)) {
    out.push_back(std::string(field) + " contains unsupported characters");
  }
}

void check_source(std::string_view field, std::string_view value,
                  std::vector<std::string>& out) {
  if (value.empty()) {
    out.push_back(std::string(field) + " must not be empty");
  } else {
    check_text(field, value, out);
  }
}

constexpr bool is_decision(const NodeKind& kind) {
  return std::holds_alternative<Decision>(kind);
}

bool is_standard_sub_layer(const NodeKind& kind) {
  const KindTag tag = kind_tag(kind);
  return tag == KindTag::text || tag == KindTag::image ||
         tag == KindTag::video || tag == KindTag::audio;
}

InPort matching_in(OutPort p) {
  return p == OutPort::main_out ? InPort::main_in : InPort::sub_in;
}

}  // namespace

KindTag kind_tag(const NodeKind& kind) {
  return static_cast<KindTag>(kind.index());
}

std::string_view kind_name(KindTag tag) {
  switch (tag) {
    case KindTag::text: return "text";
    case KindTag::image: return "image";
    case KindTag::video: return "video";
    case KindTag::audio: return "audio";
    case KindTag::map: return "map";
    case KindTag::volume: return "volume";
    case KindTag::slice: return "slice";
    case KindTag::surface: return "surface";
    case KindTag::decision: return "decision";
  }
  return "unknown";
}

std::optional<KindTag> kind_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(KindTag::decision); ++i) {
    const auto tag = static_cast<KindTag>(i);
    if (kind_name(tag) == name) return tag;
  }
  return std::nullopt;
}

std::string_view to_string(HAlign v) {
  switch (v) {
    case HAlign::left: return "left";
    case HAlign::center: return "center";
    case HAlign::right: return "right";
  }
  return "";
}

std::string_view to_string(VAlign v) {
  switch (v) {
    case VAlign::top: return "top";
    case VAlign::middle: return "middle";
    case VAlign::bottom: return "bottom";
  }
  return "";
}

std::string_view to_string(VolumeMode v) {
  switch (v) {
    case VolumeMode::mip: return "mip";
    case VolumeMode::iso: return "iso";
    case VolumeMode::dvr: return "dvr";
  }
  return "";
}

std::string_view to_string(Axis v) {
  switch (v) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "";
}

std::optional<HAlign> parse_h_align(std::string_view s) {
  for (auto v : {HAlign::left, HAlign::center, HAlign::right})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<VAlign> parse_v_align(std::string_view s) {
  for (auto v : {VAlign::top, VAlign::middle, VAlign::bottom})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<VolumeMode> parse_volume_mode(std::string_view s) {
  for (auto v : {VolumeMode::mip, VolumeMode::iso, VolumeMode::dvr})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<Axis> parse_axis(std::string_view s) {
  for (auto v : {Axis::x, Axis::y, Axis::z})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::string_view to_string(OutPort p) {
  return p == OutPort::main_out ? "main-out" : "sub-out";
}

std::string_view to_string(InPort p) {
  return p == InPort::main_in ? "main-in" : "sub-in";
}

std::optional<std::string> data_source(const NodeKind& kind) {
  return std::visit(
      overloaded{
          [](const Image& k) -> std::optional<std::string> { return k.src; },
          [](const Video& k) -> std::optional<std::string> { return k.src; },
          [](const Audio& k) -> std::optional<std::string> { return k.src; },
          [](const Volume& k) -> std::optional<std::string> { return k.src; },
          [](const Slice& k) -> std::optional<std::string> { return k.src; },
          [](const Surface& k) -> std::optional<std::string> {
            return k.model_ref;
          },
          [](const auto&) -> std::optional<std::string> {
            return std::nullopt;
          }},
      kind);
}

const Camera* camera_of(const NodeKind& kind) {
  if (const auto* v = std::get_if<Volume>(&kind)) return &v->camera;
  if (const auto* s = std::get_if<Slice>(&kind)) return &s->camera;
  if (const auto* s = std::get_if<Surface>(&kind)) return &s->camera;
  return nullptr;
}

bool is_representable_text(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const long cp = decode_utf8(s, i);
    if (cp < 0) return false;
    if (cp < 0x20 && cp != '\t' && cp != '\n' && cp != '\r') return false;
    if (cp == 0xFFFE || cp == 0xFFFF) return false;
  }
  return true;
}

std::vector<std::string> check_kind(const NodeKind& kind) {
  std::vector<std::string> out;
  std::visit(
      overloaded{
          [&](const Text& k) { check_text("content", k.content, out); },
          [&](const Image& k) {
            check_source("src", k.src, out);
            check_text("position", k.position, out);
            check_text("size", k.size, out);
          },
          [&](const Video& k) {
            check_source("src", k.src, out);
            check_text("position", k.position, out);
            check_text("size", k.size, out);
          },
          [&](const Audio& k) { check_source("src", k.src, out); },
          [&](const Map& k) {
            if (!(k.lat >= -90.0 && k.lat <= 90.0))
              out.push_back("lat must lie in [-90, 90], got " + number(k.lat));
            if (!(k.lon >= -180.0 && k.lon <= 180.0))
              out.push_back("lon must lie in [-180, 180], got " +
                            number(k.lon));
            if (!(std::isfinite(k.zoom_level) && k.zoom_level > 0.0))
              out.push_back("zoom must be positive, got " +
                            number(k.zoom_level));
          },
          [&](const Volume& k) {
            check_source("src", k.src, out);
            if (!std::isfinite(k.iso_value)) out.push_back("iso not finite");
            if (!std::isfinite(k.intensity_lo) ||
                !std::isfinite(k.intensity_hi)) {
              out.push_back("intensity range not finite");
            } else if (k.intensity_lo > k.intensity_hi) {
              out.push_back("intensity range inverted (intensity-lo " +
                            number(k.intensity_lo) + " > intensity-hi " +
                            number(k.intensity_hi) + ")");
            }
            check_camera(k.camera, out);
          },
          [&](const Slice& k) {
            check_source("src", k.src, out);
            if (k.index < 0) out.push_back("index must be >= 0");
            check_camera(k.camera, out);
          },
          [&](const Surface& k) {
            check_source("model", k.model_ref, out);
            check_camera(k.camera, out);
          },
          [&](const Decision& k) { check_text("prompt", k.prompt, out); }},
      kind);
  return out;
}

// ---------------------------------------------------------------------------

StoryGraph StoryGraph::from_parts(std::vector<StoryNode> nodes,
                                  std::vector<Edge> edges) {
  StoryGraph g;
  for (auto& n : nodes) {
    if (n.id.empty()) throw GraphError("node without id");
    const NodeId id = n.id;
    if (!g.nodes_.emplace(id, std::move(n)).second) {
      throw GraphError("duplicate node id " + quoted(id));
    }
  }
  g.edges_ = std::move(edges);
  return g;
}

NodeId StoryGraph::fresh_id() {
  NodeId id;
  do {
    id = NodeId("n" + std::to_string(++counter_));
  } while (contains(id));
  return id;
}

NodeId StoryGraph::add_node(NodeKind kind,
                            std::optional<double> extent_override) {
  StoryNode node{NodeId{}, std::move(kind), extent_override};
  const std::uint64_t saved = counter_;
  node.id = fresh_id();
  try {
    insert_node(node);
  } catch (...) {
    counter_ = saved;
    throw;
  }
  return node.id;
}

void StoryGraph::insert_node(StoryNode node) {
  if (node.id.empty()) throw GraphError("node without id");
  if (contains(node.id)) {
    throw GraphError("duplicate node id " + quoted(node.id));
  }
  if (auto problems = check_kind(node.kind); !problems.empty()) {
    throw GraphError(std::string(kind_name(kind_tag(node.kind))) +
                     " node: " + problems.front());
  }
  if (node.extent_override &&
      !(std::isfinite(*node.extent_override) && *node.extent_override > 0.0)) {
    throw GraphError("extent must be positive");
  }
  const NodeId id = node.id;
  nodes_.emplace(id, std::move(node));
}

void StoryGraph::set_kind(const NodeId& id, NodeKind kind) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw GraphError("unknown node id " + quoted(id));
  if (auto problems = check_kind(kind); !problems.empty()) {
    throw GraphError("node " + quoted(id) + ": " + problems.front());
  }
  // Changing to or from a decision would invalidate the attached edges.
  if (is_decision(kind) != is_decision(it->second.kind) &&
      (!out_edges(id, OutPort::main_out).empty() ||
       !out_edges(id, OutPort::sub_out).empty() || !in_edges(id).empty())) {
    throw GraphError("node " + quoted(id) +
                     ": cannot change decision status of a connected node");
  }
  it->second.kind = std::move(kind);
}

void StoryGraph::set_extent_override(const NodeId& id,
                                     std::optional<double> extent) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw GraphError("unknown node id " + quoted(id));
  if (extent && !(std::isfinite(*extent) && *extent > 0.0)) {
    throw GraphError("node " + quoted(id) + ": extent must be positive");
  }
  it->second.extent_override = extent;
}

void StoryGraph::remove_node(const NodeId& id) {
  if (nodes_.erase(id) == 0) {
    throw GraphError("unknown node id " + quoted(id));
  }
  std::erase_if(edges_, [&](const Edge& e) { return e.from == id || e.to == id; });
}

const StoryNode* StoryGraph::find(const NodeId& id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const StoryNode& StoryGraph::node(const NodeId& id) const {
  if (const auto* n = find(id)) return *n;
  throw GraphError("unknown node id " + quoted(id));
}

std::vector<const Edge*> StoryGraph::out_edges(const NodeId& id,
                                               OutPort port) const {
  std::vector<const Edge*> out;
  for (const auto& e : edges_) {
    if (e.from == id && e.from_port == port) out.push_back(&e);
  }
  return out;
}

std::vector<const Edge*> StoryGraph::in_edges(const NodeId& id) const {
  std::vector<const Edge*> out;
  for (const auto& e : edges_) {
    if (e.to == id) out.push_back(&e);
  }
  return out;
}

const Edge* StoryGraph::main_successor(const NodeId& id) const {
  for (const auto& e : edges_) {
    if (e.from == id && e.from_port == OutPort::main_out) return &e;
  }
  return nullptr;
}

const Edge* StoryGraph::sub_successor(const NodeId& id) const {
  for (const auto& e : edges_) {
    if (e.from == id && e.from_port == OutPort::sub_out) return &e;
  }
  return nullptr;
}

void StoryGraph::check_connect(const Edge& edge) const {
  const StoryNode* from = find(edge.from);
  const StoryNode* to = find(edge.to);
  if (!from) throw GraphError("unknown node id " + quoted(edge.from));
  if (!to) throw GraphError("unknown node id " + quoted(edge.to));
  if (matching_in(edge.from_port) != edge.to_port) {
    throw GraphError("port mismatch: " + std::string(to_string(edge.from_port)) +
                     " cannot connect to " + std::string(to_string(edge.to_port)));
  }
  if (edge.from == edge.to) {
    throw GraphError("self-loop on node " + quoted(edge.from));
  }
  const bool from_decision = is_decision(from->kind);
  if (from_decision) {
    if (edge.from_port == OutPort::sub_out) {
      throw GraphError("decision node " + quoted(edge.from) +
                       " cannot start a sub-path");
    }
    if (!edge.label || edge.label->empty()) {
      throw GraphError("edge out of decision node " + quoted(edge.from) +
                       " needs an option label");
    }
    if (!is_representable_text(*edge.label)) {
      throw GraphError("edge label contains unsupported characters");
    }
  } else {
    if (edge.label) {
      throw GraphError("edge out of " + quoted(edge.from) +
                       " carries a label but the node is not a decision");
    }
    const Edge* existing = edge.from_port == OutPort::main_out
                               ? main_successor(edge.from)
                               : sub_successor(edge.from);
    if (existing) {
      throw GraphError(
          "node " + quoted(edge.from) + " already has a " +
          (edge.from_port == OutPort::main_out ? "main" : "sub") +
          " successor");
    }
  }
  if (edge.to_port == InPort::sub_in && is_decision(to->kind)) {
    throw GraphError("decision node " + quoted(edge.to) +
                     " cannot be the target of a sub edge");
  }
  if (!in_edges(edge.to).empty()) {
    throw GraphError("node " + quoted(edge.to) +
                     " already has an incoming edge (rejoin)");
  }
  // Every node has at most one parent, so a cycle closes iff `to` is an
  // ancestor of `from`.
  std::set<NodeId> seen;
  NodeId cursor = edge.from;
  while (seen.insert(cursor).second) {
    if (cursor == edge.to) {
      throw GraphError("cycle: connecting " + quoted(edge.from) + " -> " +
                       quoted(edge.to) + " closes a loop");
    }
    auto parents = in_edges(cursor);
    if (parents.empty()) break;
    cursor = parents.front()->from;
  }
}

const Edge& StoryGraph::connect(const NodeId& from, OutPort from_port,
                                const NodeId& to,
                                std::optional<std::string> label) {
  return connect(from, from_port, to, matching_in(from_port), std::move(label));
}

const Edge& StoryGraph::connect(const NodeId& from, OutPort from_port,
                                const NodeId& to, InPort to_port,
                                std::optional<std::string> label) {
  Edge edge{from, from_port, to, to_port, std::move(label)};
  check_connect(edge);
  edges_.push_back(std::move(edge));
  return edges_.back();
}

NodeId StoryGraph::duplicate_node(const NodeId& id) {
  const StoryNode& original = node(id);
  if (is_decision(original.kind)) {
    throw GraphError("decision node " + quoted(id) + " cannot be duplicated");
  }
  if (main_successor(id)) {
    throw GraphError("node " + quoted(id) +
                     " already has a main successor; cannot attach a copy");
  }
  StoryNode copy = original;
  const std::uint64_t saved = counter_;
  copy.id = fresh_id();
  const NodeId copy_id = copy.id;
  nodes_.emplace(copy_id, std::move(copy));
  try {
    connect(id, OutPort::main_out, copy_id);
  } catch (...) {
    nodes_.erase(copy_id);
    counter_ = saved;
    throw;
  }
  return copy_id;
}

std::vector<Edge> StoryGraph::canonical_edges() const {
  std::vector<Edge> sorted = edges_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Edge& a, const Edge& b) {
                     return std::tie(a.from, a.from_port) <
                            std::tie(b.from, b.from_port);
                   });
  return sorted;
}

bool StoryGraph::operator==(const StoryGraph& other) const {
  return nodes_ == other.nodes_ && canonical_edges() == other.canonical_edges();
}

// ---------------------------------------------------------------------------

std::vector<Diagnostic> validate(const StoryGraph& graph) {
  std::vector<Diagnostic> out;
  auto node_error = [&](const NodeId& id, std::string message) {
    out.push_back({Severity::error, std::move(message), id, {}, {}, {}});
  };
  auto edge_error = [&](std::size_t index, std::string message) {
    out.push_back({Severity::error, std::move(message), {}, index, {}, {}});
  };

  if (graph.empty()) {
    out.push_back({Severity::error, "story graph is empty", {}, {}, {}, {}});
    return out;
  }

  for (const auto& [id, node] : graph.nodes()) {
    for (auto& problem : check_kind(node.kind)) {
      node_error(id, "node " + quoted(id) + ": " + problem);
    }
    if (node.extent_override && !(std::isfinite(*node.extent_override) &&
                                  *node.extent_override > 0.0)) {
      node_error(id, "node " + quoted(id) + ": extent must be positive");
    }
  }

  // Per-edge checks. Edges that fail them are excluded from structural
  // analysis so one defect yields one diagnostic.
  const auto& edges = graph.edges();
  std::vector<bool> usable(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const StoryNode* from = graph.find(e.from);
    const StoryNode* to = graph.find(e.to);
    if (!from || !to) {
      edge_error(i, "edge references unknown node id " +
                        quoted(from ? e.to : e.from));
      continue;
    }
    if (matching_in(e.from_port) != e.to_port) {
      edge_error(i, "edge " + quoted(e.from) + " -> " + quoted(e.to) +
                        ": port mismatch (" + std::string(to_string(e.from_port)) +
                        " to " + std::string(to_string(e.to_port)) + ")");
      continue;
    }
    if (e.from == e.to) {
      edge_error(i, "self-loop on node " + quoted(e.from));
      continue;
    }
    usable[i] = true;
    const bool from_decision = is_decision(from->kind);
    if (from_decision && e.from_port == OutPort::main_out &&
        (!e.label || e.label->empty())) {
      edge_error(i, "edge " + quoted(e.from) + " -> " + quoted(e.to) +
                        ": decision option needs a label");
    } else if (!from_decision && e.label) {
      edge_error(i, "edge " + quoted(e.from) + " -> " + quoted(e.to) +
                        ": label on an edge out of a non-decision node");
    } else if (e.label && !is_representable_text(*e.label)) {
      edge_error(i, "edge label contains unsupported characters");
    }
  }

  std::map<NodeId, std::vector<std::size_t>> main_out, sub_out, incoming;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!usable[i]) continue;
    const Edge& e = edges[i];
    (e.from_port == OutPort::main_out ? main_out : sub_out)[e.from].push_back(i);
    incoming[e.to].push_back(i);
  }

  for (const auto& [id, node] : graph.nodes()) {
    const std::size_t mains = main_out[id].size();
    const std::size_t subs = sub_out[id].size();
    if (is_decision(node.kind)) {
      if (subs > 0) {
        node_error(id, "decision node " + quoted(id) +
                           " cannot start a sub-path");
      }
      if (mains < 2) {
        node_error(id, "decision node " + quoted(id) +
                           " needs >=2 branches, has " + std::to_string(mains));
      }
    } else {
      if (mains > 1) {
        node_error(id, "node " + quoted(id) + " has " + std::to_string(mains) +
                           " main successors (only decisions may branch)");
      }
      if (subs > 1) {
        node_error(id, "node " + quoted(id) + " has " + std::to_string(subs) +
                           " sub successors");
      }
    }
    const auto& in = incoming[id];
    if (in.size() > 1) {
      node_error(id, "node " + quoted(id) + " has " + std::to_string(in.size()) +
                         " incoming edges (rejoin)");
    }
    for (std::size_t i : in) {
      if (edges[i].to_port == InPort::sub_in && is_decision(node.kind)) {
        edge_error(i, "decision node " + quoted(id) +
                          " cannot be the target of a sub edge");
      }
    }
  }

  // Cycle detection over usable edges (iterative three-colour DFS).
  enum class Colour { white, grey, black };
  std::map<NodeId, Colour> colour;
  std::map<NodeId, std::vector<NodeId>> succ;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (usable[i]) succ[edges[i].from].push_back(edges[i].to);
  }
  bool cyclic = false;
  for (const auto& [start, unused] : graph.nodes()) {
    if (colour[start] != Colour::white) continue;
    std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
    colour[start] = Colour::grey;
    while (!stack.empty()) {
      auto& [current, next] = stack.back();
      const auto& children = succ[current];
      if (next < children.size()) {
        const NodeId child = children[next++];
        if (colour[child] == Colour::grey) {
          cyclic = true;
          node_error(child, "cycle through node " + quoted(child));
        } else if (colour[child] == Colour::white) {
          colour[child] = Colour::grey;
          stack.emplace_back(child, 0);
        }
      } else {
        colour[current] = Colour::black;
        stack.pop_back();
      }
    }
  }

  if (!cyclic) {
    std::vector<NodeId> roots;
    for (const auto& [id, node] : graph.nodes()) {
      if (incoming[id].empty()) roots.push_back(id);
    }
    if (roots.size() > 1) {
      std::string names;
      for (const auto& r : roots) names += (names.empty() ? "" : ", ") + quoted(r);
      out.push_back({Severity::error, "multiple roots: " + names, {}, {}, {}, {}});
    } else if (roots.size() == 1) {
      // Sub-depth walk from the root.
      std::vector<std::pair<NodeId, int>> work{{roots.front(), 0}};
      while (!work.empty()) {
        auto [id, depth] = work.back();
        work.pop_back();
        const StoryNode& node = graph.node(id);
        if (depth > 0) {
          const auto& in = incoming[id];
          const bool via_sub =
              !in.empty() && edges[in.front()].to_port == InPort::sub_in;
          if (is_decision(node.kind)) {
            if (!via_sub) {
              node_error(id, "decision node " + quoted(id) +
                                 " inside a sub-path");
            }
          } else if (!is_standard_sub_layer(node.kind)) {
            out.push_back({Severity::warning,
                           "non-standard sub-path layer kind '" +
                               std::string(kind_name(kind_tag(node.kind))) +
                               "' for node " + quoted(id),
                           id, {}, {}, {}});
          }
        }
        for (std::size_t i : main_out[id]) work.emplace_back(edges[i].to, depth);
        for (std::size_t i : sub_out[id]) work.emplace_back(edges[i].to, depth + 1);
      }
    }
  }
  return out;
}

NodeId root(const StoryGraph& graph) {
  if (graph.empty()) throw GraphError("story graph is empty");
  std::vector<NodeId> roots;
  for (const auto& [id, node] : graph.nodes()) {
    if (graph.in_edges(id).empty()) roots.push_back(id);
  }
  if (roots.empty()) throw GraphError("no root: every node has an incoming edge");
  if (roots.size() > 1) {
    std::string names;
    for (const auto& r : roots) names += (names.empty() ? "" : ", ") + quoted(r);
    throw GraphError("multiple roots: " + names);
  }
  return roots.front();
}

}  // namespace scrolly
