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


// Random story generators for property tests. Every graph produced here is
// valid by construction; the shapes cover sub-paths with nested layers,
// main chains inside sub-paths, decisions and runs of blendable nodes.

#ifndef SCROLLY_TESTS_GENERATORS_HPP_
#define SCROLLY_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scrolly/story_model.hpp"
#include "scrolly/story_xml.hpp"

namespace gen {

using namespace scrolly;

struct GraphOptions {
  int max_nodes = 20;
  double sub_probability = 0.45;
  double decision_probability = 0.2;
  double same_kind_probability = 0.4;  // repeat the previous main kind
  double extent_override_probability = 0.2;
  int max_branches = 3;
  int max_sub_depth = 3;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  // Printable text including markup characters, whitespace and multibyte
  // sequences.
  std::string text(int max_len = 24) {
    static const std::vector<std::string> pieces{
        "a", "b", "Z", "0", "9", " ", "  ", "\t", "\n", "\r", "\r\n", "&", "<",
        ">", "\"", "'", "&amp;", "]]>", "-", ".", "\xC3\xA9", "\xE6\xBC\xA2",
        "\xF0\x9F\x8E\x89", "word", "=", "/", "?"};
    const int n = uniform_int(1, max_len);
    std::string s;
    for (int i = 0; i < n; ++i) s += pieces[uniform_int(0, int(pieces.size()) - 1)];
    return s;
  }

  std::string source(const char* dir, const char* ext) {
    return std::string(dir) + "/f" + std::to_string(uniform_int(0, 3)) + ext;
  }

  double number(double lo, double hi) {
    // Mix of short decimals and full-precision values.
    if (chance(0.5)) return std::round(uniform(lo, hi) * 100.0) / 100.0;
    return uniform(lo, hi);
  }

  Camera camera() {
    Camera c;
    c.position = Eigen::Vector3d(number(-50, 50), number(-50, 50), number(-50, 50));
    Eigen::Vector4d q(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    if (q.norm() < 1e-3) q = Eigen::Vector4d(0, 0, 0, 1);
    c.rotation.coeffs() = q.normalized();
    c.zoom = number(0.1, 8.0);
    return c;
  }

  NodeKind kind(KindTag tag) {
    switch (tag) {
      case KindTag::text:
        return Text{text(), HAlign(uniform_int(0, 2)), VAlign(uniform_int(0, 2))};
      case KindTag::image:
        return Image{source("img", ".png"), chance(0.5) ? "center" : text(6),
                     chance(0.5) ? "medium" : text(6)};
      case KindTag::video:
        return Video{source("vid", ".mp4"), "left", chance(0.5) ? "small" : text(6)};
      case KindTag::audio:
        return Audio{source("snd", ".mp3")};
      case KindTag::map:
        return Map{number(-80, 80), number(-179, 179), number(0.5, 18)};
      case KindTag::volume: {
        const double lo = number(0, 0.5);
        return Volume{source("vol", ".raw"), VolumeMode(uniform_int(0, 2)),
                      number(0, 1), lo, lo + number(0, 0.5), camera()};
      }
      case KindTag::slice:
        return Slice{source("vol", ".raw"), Axis(uniform_int(0, 2)),
                     std::int64_t(uniform_int(0, 500)), camera()};
      case KindTag::surface:
        return Surface{source("mdl", ".glb"), camera()};
      case KindTag::decision:
        return Decision{text()};
    }
    return Text{};
  }

  // Same kind and data source as `like` with fresh parameters.
  NodeKind sibling_of(const NodeKind& like) {
    NodeKind k = kind(kind_tag(like));
    const auto src = data_source(like);
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Surface>) {
            v.model_ref = *src;
          } else if constexpr (requires { v.src; }) {
            v.src = *src;
          }
        },
        k);
    return k;
  }

  KindTag main_tag() {
    static const KindTag tags[] = {KindTag::text, KindTag::image, KindTag::video,
                                   KindTag::audio, KindTag::map, KindTag::volume,
                                   KindTag::slice, KindTag::surface};
    return tags[uniform_int(0, 7)];
  }

  KindTag layer_tag() {
    static const KindTag tags[] = {KindTag::text, KindTag::image, KindTag::video,
                                   KindTag::audio};
    return tags[uniform_int(0, 3)];
  }

  StoryGraph graph(const GraphOptions& options = {}) {
    options_ = options;
    nodes_.clear();
    edges_.clear();
    main_chain(std::nullopt, {}, std::nullopt);
    return StoryGraph::from_parts(nodes_, edges_);
  }

  StoryDocument document(const GraphOptions& options = {}) {
    StoryDocument doc;
    doc.graph = graph(options);
    for (const auto& [id, node] : doc.graph.nodes()) {
      if (chance(0.7)) doc.layout[id] = LayoutHint{number(-2000, 2000), number(-2000, 2000)};
    }
    return doc;
  }

 private:
  bool budget(int n = 1) const { return int(nodes_.size()) + n <= options_.max_nodes; }

  NodeId add(NodeKind kind) {
    // Ids drawn from the full allowed charset.
    static const char* prefixes[] = {"n", "N_", "step.", "x-", "Node"};
    NodeId id(std::string(prefixes[uniform_int(0, 4)]) + std::to_string(nodes_.size()));
    std::optional<double> extent;
    if (!std::holds_alternative<Decision>(kind) &&
        chance(options_.extent_override_probability)) {
      static const double extents[] = {1000, 1500, 2000, 2500, 4000};
      extent = extents[uniform_int(0, 4)];
    }
    nodes_.push_back(StoryNode{id, std::move(kind), extent});
    return id;
  }

  void link(const NodeId& from, OutPort port, const NodeId& to,
            std::optional<std::string> label = {}) {
    edges_.push_back(Edge{from, port, to,
                          port == OutPort::main_out ? InPort::main_in : InPort::sub_in,
                          std::move(label)});
  }

  // Sub-path hanging off `parent` at the given depth.
  void sub_path(const NodeId& parent, int depth) {
    NodeId prev;
    bool first = true;
    while (budget()) {
      const NodeId id = add(kind(layer_tag()));
      if (first) link(parent, OutPort::sub_out, id);
      else link(prev, OutPort::main_out, id);
      first = false;
      if (depth < options_.max_sub_depth && budget() &&
          chance(options_.sub_probability / 2)) {
        sub_path(id, depth + 1);
      }
      prev = id;
      if (!chance(0.35)) break;
    }
  }

  // Main chain starting after `from` (the root chain when empty).
  void main_chain(std::optional<NodeId> from, std::optional<std::string> label,
                  std::optional<NodeKind> previous) {
    while (budget()) {
      if (from && budget(3) && chance(options_.decision_probability)) {
        const NodeId decision = add(kind(KindTag::decision));
        link(*from, OutPort::main_out, decision, label);
        const int branches =
            std::min(uniform_int(2, options_.max_branches),
                     options_.max_nodes - int(nodes_.size()));
        // All option heads first, so the budget covers every branch.
        std::vector<NodeId> heads;
        for (int b = 0; b < branches; ++b) {
          const NodeId head = add(kind(main_tag()));
          link(decision, OutPort::main_out, head, text(8));
          heads.push_back(head);
        }
        for (const auto& head : heads) {
          maybe_sub(head);
          main_chain(head, {}, graph_kind(head));
        }
        return;
      }
      NodeKind k = previous && is_continuous(kind_tag(*previous)) &&
                           chance(options_.same_kind_probability)
                       ? sibling_of(*previous)
                       : kind(main_tag());
      const NodeId id = add(k);
      if (from) link(*from, OutPort::main_out, id, label);
      label.reset();
      maybe_sub(id);
      from = id;
      previous = k;
      if (!chance(0.75)) return;
    }
  }

  void maybe_sub(const NodeId& id) {
    if (budget() && chance(options_.sub_probability)) sub_path(id, 1);
  }

  NodeKind graph_kind(const NodeId& id) const {
    for (const auto& n : nodes_)
      if (n.id == id) return n.kind;
    return Text{};
  }

  static bool is_continuous(KindTag t) {
    return t == KindTag::map || t == KindTag::volume || t == KindTag::slice ||
           t == KindTag::surface;
  }

  std::mt19937_64 rng_;
  GraphOptions options_;
  std::vector<StoryNode> nodes_;
  std::vector<Edge> edges_;
};

// k decisions in series with branch counts b_1..b_k. Each option of a
// decision at level i leads to its own copy of levels i+1..k, so the tree
// has exactly prod(b_i) leaves.
inline StoryGraph serial_decisions(const std::vector<int>& branches) {
  std::vector<StoryNode> nodes;
  std::vector<Edge> edges;
  auto add = [&](const std::string& id, NodeKind kind) {
    nodes.push_back(StoryNode{NodeId(id), std::move(kind), std::nullopt});
    return NodeId(id);
  };
  auto build = [&](auto& self, const NodeId& from, std::size_t level,
                   const std::string& tag) -> void {
    if (level == branches.size()) return;
    const NodeId d = add("d" + tag, Decision{"choose"});
    edges.push_back({from, OutPort::main_out, d, InPort::main_in, std::nullopt});
    for (int b = 0; b < branches[level]; ++b) {
      const std::string child_tag = tag + "_" + std::to_string(b);
      const NodeId option = add("o" + child_tag, Text{"option " + child_tag});
      edges.push_back({d, OutPort::main_out, option, InPort::main_in,
                       "option " + std::to_string(b)});
      self(self, option, level + 1, child_tag);
    }
  };
  const NodeId intro = add("intro", Text{"intro"});
  build(build, intro, 0, "");
  return StoryGraph::from_parts(std::move(nodes), std::move(edges));
}

}  // namespace gen

#endif  // SCROLLY_TESTS_GENERATORS_HPP_
