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


// Independent reference implementations used as test oracles. They are
// deliberately naive: parent-link stacks instead of recursion, linear scans
// over every boundary instead of binary search, textbook geometry for map
// flights and a bitwise CRC for archives.

#ifndef SCROLLY_TESTS_ORACLES_HPP_
#define SCROLLY_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scrolly/interpolate.hpp"
#include "scrolly/timeline.hpp"
#include "scrolly/tree_builder.hpp"

namespace oracle {

using namespace scrolly;

// Steps of the segment headed by `head`. A sub edge pushes a layer, a main
// edge below the head replaces the top layer. Sub children come first.
inline std::vector<std::vector<NodeId>> flatten(const StoryGraph& g,
                                                const NodeId& head) {
  struct Item {
    NodeId node;
    std::vector<NodeId> stack;
  };
  std::vector<std::vector<NodeId>> steps;
  std::vector<Item> todo{{head, {head}}};
  while (!todo.empty()) {
    Item item = todo.back();
    todo.pop_back();
    steps.push_back(item.stack);
    std::vector<Item> next;
    if (item.node != head) {
      for (const auto& e : g.edges()) {
        if (e.from == item.node && e.from_port == OutPort::main_out) {
          auto stack = item.stack;
          stack.back() = e.to;
          todo.push_back({e.to, stack});
        }
      }
    }
    for (const auto& e : g.edges()) {
      if (e.from == item.node && e.from_port == OutPort::sub_out) {
        auto stack = item.stack;
        stack.push_back(e.to);
        todo.push_back({e.to, stack});
      }
    }
  }
  return steps;
}

inline double extent(const StoryGraph& g, const NodeId& owner,
                     const TimelineConfig& config) {
  return g.node(owner).extent_override.value_or(config.node_extent_px);
}

struct PathStep {
  std::vector<NodeId> layers;
  double offset = 0.0;
  double extent = 0.0;
};

inline std::vector<SegmentId> path(const StoryTree& tree, const Decisions& decisions) {
  std::vector<SegmentId> out{tree.root};
  for (;;) {
    const auto& kids = tree.children.count(out.back())
                           ? tree.children.at(out.back())
                           : std::vector<TreeChild>{};
    if (kids.empty()) return out;
    if (tree.segments.at(out.back()).decision) {
      if (!decisions.count(out.back())) return out;
      out.push_back(kids.at(decisions.at(out.back())).id);
    } else {
      out.push_back(kids.front().id);
    }
  }
}

inline std::vector<PathStep> path_steps(const StoryTree& tree,
                                        const TimelineConfig& config,
                                        const Decisions& decisions) {
  std::vector<PathStep> out;
  double offset = 0.0;
  for (const auto& seg : path(tree, decisions)) {
    for (const auto& step : tree.segments.at(seg).steps) {
      const double e = extent(tree.graph, step.layers.back(), config);
      out.push_back({step.layers, offset, e});
      offset += e;
    }
  }
  return out;
}

struct Layer {
  NodeId id;
  double opacity;
};

struct Frame {
  std::vector<Layer> layers;
  bool decision_pending = false;
  double scroll = 0.0;
  double total = 0.0;
  std::optional<std::size_t> window;  // index of the step after the boundary
  double raw_t = 0.0;                 // un-eased window progress
};

inline bool has(const std::vector<NodeId>& v, const NodeId& id) {
  for (const auto& x : v)
    if (x == id) return true;
  return false;
}

inline bool continuous(const NodeKind& k) {
  return std::holds_alternative<Map>(k) || std::holds_alternative<Volume>(k) ||
         std::holds_alternative<Slice>(k) || std::holds_alternative<Surface>(k);
}

inline bool blends(const StoryGraph& g, const std::vector<NodeId>& prev,
                   const std::vector<NodeId>& next) {
  const NodeId& a = prev.back();
  const NodeId& b = next.back();
  if (has(next, a) || has(prev, b)) return false;
  const NodeKind& ka = g.node(a).kind;
  const NodeKind& kb = g.node(b).kind;
  return ka.index() == kb.index() && continuous(ka) && data_source(ka) == data_source(kb);
}

inline Frame eval(const StoryTree& tree, const TimelineConfig& config,
                  double scroll, const Decisions& decisions) {
  const auto steps = path_steps(tree, config, decisions);
  const double W = config.transition_window_px;
  Frame f;
  f.total = steps.back().offset + steps.back().extent;
  const auto p = path(tree, decisions);
  double s = scroll;
  if (tree.segments.at(p.back()).decision && !tree.children.at(p.back()).empty()) {
    const double clamp = f.total - W / 2;
    if (s >= clamp) {
      s = clamp;
      f.decision_pending = true;
    }
  }
  if (s > f.total) s = f.total;
  f.scroll = s;

  for (std::size_t k = 1; k < steps.size(); ++k) {
    const double b = steps[k].offset;
    if (b - W / 2 <= s && s < b + W / 2) f.window = k;
  }
  if (!f.window) {
    std::size_t here = 0;
    for (std::size_t k = 0; k < steps.size(); ++k)
      if (steps[k].offset <= s) here = k;
    for (const auto& id : steps[here].layers) f.layers.push_back({id, 1.0});
    return f;
  }
  const auto& prev = steps[*f.window - 1].layers;
  const auto& next = steps[*f.window].layers;
  f.raw_t = (s - (steps[*f.window].offset - W / 2)) / W;
  double t = f.raw_t;
  if (config.easing == Easing::smoothstep) t = t * t * (3.0 - 2.0 * t);
  const bool blend = blends(tree.graph, prev, next);
  for (const auto& id : prev) {
    if (has(next, id)) f.layers.push_back({id, 1.0});
    else if (blend && id == prev.back()) continue;
    else if (1.0 - t > 0.0) f.layers.push_back({id, 1.0 - t});
  }
  for (const auto& id : next) {
    if (has(prev, id)) continue;
    if (blend && id == next.back()) f.layers.push_back({id, 1.0});
    else if (t > 0.0) f.layers.push_back({id, t});
  }
  return f;
}

// Map flights. The optimal path is a geodesic of
//   ds^2 = (rho^2 du^2 + dw^2 / rho^2) / w^2,
// which becomes the hyperbolic half-plane after x = rho^2 u. Its length has
// a closed form that owes nothing to the van Wijk parametrisation.
inline double hyperbolic_length(double u1, double w0, double w1, double rho) {
  const double x = rho * rho * u1;
  return std::acosh(1.0 + (x * x + (w1 - w0) * (w1 - w0)) / (2.0 * w0 * w1)) / rho;
}

// Arc length by the midpoint rule over `n` pieces.
template <typename F>
double arc_length(F&& at, double rho, int n) {
  double length = 0.0;
  auto [c, w] = at(0.0);
  for (int i = 1; i <= n; ++i) {
    auto [c2, w2] = at(double(i) / n);
    const double du = (c2 - c).norm();
    const double dw = w2 - w;
    length += std::sqrt(rho * rho * du * du + dw * dw / (rho * rho)) / (0.5 * (w + w2));
    c = c2;
    w = w2;
  }
  return length;
}

// Bitwise CRC-32 (IEEE, reflected).
inline std::uint32_t crc32(std::string_view bytes) {
  std::uint32_t crc = 0xFFFFFFFFu;
  for (unsigned char ch : bytes) {
    crc ^= ch;
    for (int k = 0; k < 8; ++k) crc = (crc >> 1) ^ (0xEDB88320u & (0u - (crc & 1u)));
  }
  return ~crc;
}

struct ZipEntry {
  std::string name;
  std::string data;
  std::uint16_t method = 0;
  std::uint16_t time = 0, date = 0;
  bool crc_ok = false;
};

// Reads a stored-only archive through its central directory.
inline std::optional<std::vector<ZipEntry>> read_zip(std::string_view z) {
  auto u16 = [&](std::size_t at) -> std::uint32_t {
    return std::uint8_t(z[at]) | std::uint8_t(z[at + 1]) << 8;
  };
  auto u32 = [&](std::size_t at) -> std::uint32_t { return u16(at) | u16(at + 2) << 16; };
  if (z.size() < 22) return std::nullopt;
  const std::size_t eocd = z.size() - 22;
  if (u32(eocd) != 0x06054b50u) return std::nullopt;
  const std::size_t count = u16(eocd + 10);
  std::size_t at = u32(eocd + 16);
  std::vector<ZipEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (at + 46 > z.size() || u32(at) != 0x02014b50u) return std::nullopt;
    ZipEntry e;
    e.method = std::uint16_t(u16(at + 10));
    e.time = std::uint16_t(u16(at + 12));
    e.date = std::uint16_t(u16(at + 14));
    const std::uint32_t crc = u32(at + 16);
    const std::size_t size = u32(at + 20);
    const std::size_t name_len = u16(at + 28);
    const std::size_t extra = u16(at + 30), comment = u16(at + 32);
    const std::size_t local = u32(at + 42);
    e.name = std::string(z.substr(at + 46, name_len));
    if (local + 30 > z.size() || u32(local) != 0x04034b50u) return std::nullopt;
    const std::size_t data_at = local + 30 + u16(local + 26) + u16(local + 28);
    if (data_at + size > z.size()) return std::nullopt;
    e.data = std::string(z.substr(data_at, size));
    e.crc_ok = crc32(e.data) == crc && u32(local + 14) == crc;
    out.push_back(std::move(e));
    at += 46 + name_len + extra + comment;
  }
  return out;
}

}  // namespace oracle

#endif  // SCROLLY_TESTS_ORACLES_HPP_
