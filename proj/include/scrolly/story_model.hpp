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

#ifndef SCROLLY_STORY_MODEL_HPP_
#define SCROLLY_STORY_MODEL_HPP_

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scrolly/core.hpp"

namespace scrolly {

/// Camera of a 3D view: world-space position, unit rotation, positive zoom.
template <typename Scalar>
struct CameraT {
  using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
  using Quaternion = Eigen::Quaternion<Scalar>;

  Vector3 position = Vector3::Zero();
  Quaternion rotation = Quaternion::Identity();
  Scalar zoom = Scalar(1);

  bool operator==(const CameraT& other) const {
    return position == other.position &&
           rotation.coeffs() == other.rotation.coeffs() && zoom == other.zoom;
  }
};

using Camera = CameraT<double>;

enum class HAlign { left, center, right };
enum class VAlign { top, middle, bottom };
enum class VolumeMode { mip, iso, dvr };
enum class Axis { x, y, z };

struct Text {
  std::string content;
  HAlign h_align = HAlign::center;
  VAlign v_align = VAlign::middle;
  bool operator==(const Text&) const = default;
};

struct Image {
  std::string src;
  std::string position = "center";
  std::string size = "medium";
  bool operator==(const Image&) const = default;
};

struct Video {
  std::string src;
  std::string position = "center";
  std::string size = "medium";
  bool operator==(const Video&) const = default;
};

struct Audio {
  std::string src;
  bool operator==(const Audio&) const = default;
};

/// Geographic view; lat/lon in degrees.
struct Map {
  double lat = 0.0;
  double lon = 0.0;
  double zoom_level = 1.0;
  bool operator==(const Map&) const = default;
};

struct Volume {
  std::string src;
  VolumeMode mode = VolumeMode::dvr;
  double iso_value = 0.5;
  double intensity_lo = 0.0;
  double intensity_hi = 1.0;
  Camera camera;
  bool operator==(const Volume&) const = default;
};

struct Slice {
  std::string src;
  Axis axis = Axis::z;
  std::int64_t index = 0;
  Camera camera;
  bool operator==(const Slice&) const = default;
};

struct Surface {
  std::string model_ref;
  Camera camera;
  bool operator==(const Surface&) const = default;
};

struct Decision {
  std::string prompt;
  bool operator==(const Decision&) const = default;
};

using NodeKind = std::variant<Text, Image, Video, Audio, Map, Volume, Slice,
                              Surface, Decision>;

enum class KindTag { text, image, video, audio, map, volume, slice, surface,
                     decision };

KindTag kind_tag(const NodeKind& kind);
std::string_view kind_name(KindTag tag);
std::optional<KindTag> kind_from_name(std::string_view name);

std::string_view to_string(HAlign v);
std::string_view to_string(VAlign v);
std::string_view to_string(VolumeMode v);
std::string_view to_string(Axis v);
std::optional<HAlign> parse_h_align(std::string_view s);
std::optional<VAlign> parse_v_align(std::string_view s);
std::optional<VolumeMode> parse_volume_mode(std::string_view s);
std::optional<Axis> parse_axis(std::string_view s);

/// The media file or model a node loads, if any.
std::optional<std::string> data_source(const NodeKind& kind);

/// Camera of volume/slice/surface nodes.
const Camera* camera_of(const NodeKind& kind);

/// Checks the parameter invariants of a kind. Returns one message per
/// violated invariant, each naming the offending field.
std::vector<std::string> check_kind(const NodeKind& kind);

/// True for strings that can be carried in the XML interchange format.
bool is_representable_text(std::string_view s);

struct StoryNode {
  NodeId id;
  NodeKind kind;
  std::optional<double> extent_override;  // pixels
  bool operator==(const StoryNode&) const = default;
};

enum class OutPort { main_out, sub_out };
enum class InPort { main_in, sub_in };

std::string_view to_string(OutPort p);
std::string_view to_string(InPort p);

struct Edge {
  NodeId from;
  OutPort from_port = OutPort::main_out;
  NodeId to;
  InPort to_port = InPort::main_in;
  std::optional<std::string> label;
  bool operator==(const Edge&) const = default;
};

/// Authored story graph. Mutators check every invariant that can be checked
/// locally and leave the graph untouched when they throw. Global properties
/// (single root, decision fan-out) are reported by validate().
class StoryGraph {
 public:
  StoryGraph() = default;

  /// Assembles a graph without checking edges. Node ids must be unique.
  static StoryGraph from_parts(std::vector<StoryNode> nodes,
                               std::vector<Edge> edges);

  NodeId add_node(NodeKind kind, std::optional<double> extent_override = {});
  void insert_node(StoryNode node);
  void set_kind(const NodeId& id, NodeKind kind);
  void set_extent_override(const NodeId& id, std::optional<double> extent);
  /// Removes a node and every edge touching it.
  void remove_node(const NodeId& id);

  /// Port type of the target is implied by the source port.
  const Edge& connect(const NodeId& from, OutPort from_port, const NodeId& to,
                      std::optional<std::string> label = {});
  const Edge& connect(const NodeId& from, OutPort from_port, const NodeId& to,
                      InPort to_port, std::optional<std::string> label = {});

  /// Deep-copies a node under a fresh id and links original -> copy on the
  /// main path.
  NodeId duplicate_node(const NodeId& id);

  const std::map<NodeId, StoryNode>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool contains(const NodeId& id) const { return nodes_.count(id) != 0; }
  const StoryNode* find(const NodeId& id) const;
  const StoryNode& node(const NodeId& id) const;

  /// Outgoing edges of `id` through `port`, in authored order.
  std::vector<const Edge*> out_edges(const NodeId& id, OutPort port) const;
  std::vector<const Edge*> in_edges(const NodeId& id) const;
  const Edge* main_successor(const NodeId& id) const;
  const Edge* sub_successor(const NodeId& id) const;

  /// Edges stable-sorted by (from, from_port); authored order is kept among
  /// edges sharing both, which is how decision options are ordered.
  std::vector<Edge> canonical_edges() const;

  /// Structural equality: same nodes and same canonical edge list.
  bool operator==(const StoryGraph& other) const;

 private:
  NodeId fresh_id();
  void check_connect(const Edge& edge) const;

  std::map<NodeId, StoryNode> nodes_;
  std::vector<Edge> edges_;
  std::uint64_t counter_ = 0;
};

/// All invariant violations (errors) and advisory findings (warnings). Empty
/// iff the graph is a valid story.
std::vector<Diagnostic> validate(const StoryGraph& graph);

/// The unique node without an incoming edge.
NodeId root(const StoryGraph& graph);

}  // namespace scrolly

#endif  // SCROLLY_STORY_MODEL_HPP_
