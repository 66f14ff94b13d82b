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

#include "scrolly/story_xml.hpp"

#include <expat.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <climits>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <type_traits>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

namespace scrolly {

namespace {

// ---------------------------------------------------------------------------
// Scalar codecs

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

template <int N>
std::optional<std::array<double, N>> parse_tuple(std::string_view s) {
  std::array<double, N> out{};
  for (int i = 0; i < N; ++i) {
    const auto comma = s.find(',');
    if ((comma == std::string_view::npos) != (i == N - 1)) return std::nullopt;
    auto v = parse_double(s.substr(0, comma));
    if (!v) return std::nullopt;
    out[i] = *v;
    if (comma != std::string_view::npos) s.remove_prefix(comma + 1);
  }
  return out;
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attr(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Raw document as read by the SAX pass

struct Located {
  std::string value;
  SourceLocation loc;
};

struct RawElement {
  SourceLocation loc;
  std::vector<std::pair<std::string, std::string>> attrs;
};

struct RawNode : RawElement {
  std::vector<std::pair<std::string, Located>> params;
};

class Reader {
 public:
  Reader(const ParseOptions& options, std::vector<Diagnostic>& errors,
         std::vector<Diagnostic>& warnings)
      : options_(options), errors_(errors), warnings_(warnings) {}

  bool run(std::string_view bytes);

  std::optional<RawElement> story;
  std::vector<RawNode> nodes;
  std::vector<RawElement> edges;

 private:
  enum class Ctx { story, node, edge, param, other };

  static void XMLCALL on_start(void* self, const XML_Char* name,
                               const XML_Char** atts) {
    static_cast<Reader*>(self)->start(name, atts);
  }
  static void XMLCALL on_end(void* self, const XML_Char*) {
    static_cast<Reader*>(self)->end();
  }
  static void XMLCALL on_text(void* self, const XML_Char* s, int len) {
    static_cast<Reader*>(self)->text(std::string_view(s, static_cast<std::size_t>(len)));
  }
  static void XMLCALL on_doctype(void* self, const XML_Char*, const XML_Char*,
                                 const XML_Char*, int) {
    static_cast<Reader*>(self)->fatal("DOCTYPE declarations are not allowed");
  }

  SourceLocation here() const {
    return {static_cast<std::size_t>(XML_GetCurrentLineNumber(parser_)),
            static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser_)) + 1};
  }

  void fatal(std::string message) {
    errors_.push_back({Severity::error, std::move(message), {}, {}, {}, here()});
    XML_StopParser(parser_, XML_FALSE);
  }

  // Unknown constructs: error when strict, warning when lenient. Returns
  // true when the caller should skip the construct.
  void unknown(std::string message) {
    Diagnostic d{options_.lenient ? Severity::warning : Severity::error,
                 std::move(message), {}, {}, {}, here()};
    (options_.lenient ? warnings_ : errors_).push_back(std::move(d));
  }

  void start(const XML_Char* name, const XML_Char** atts);
  void end();
  void text(std::string_view s);

  const ParseOptions& options_;
  std::vector<Diagnostic>& errors_;
  std::vector<Diagnostic>& warnings_;
  XML_Parser parser_ = nullptr;
  std::vector<Ctx> stack_;
  int skip_depth_ = 0;
  bool text_reported_ = false;
  std::string param_name_;
  Located param_;
};

std::vector<std::pair<std::string, std::string>> collect_attrs(
    const XML_Char** atts) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; atts[i] != nullptr; i += 2) out.emplace_back(atts[i], atts[i + 1]);
  return out;
}

void Reader::start(const XML_Char* name_ptr, const XML_Char** atts) {
  const std::string_view name(name_ptr);
  if (skip_depth_ > 0) {
    ++skip_depth_;
    return;
  }
  text_reported_ = false;
  const Ctx parent = stack_.empty() ? Ctx::other : stack_.back();
  if (stack_.empty()) {
    if (name != "story") {
      fatal("root element must be <story>, found <" + std::string(name) + ">");
      return;
    }
    story = RawElement{here(), collect_attrs(atts)};
    stack_.push_back(Ctx::story);
    return;
  }
  if (parent == Ctx::story && name == "node") {
    RawNode node;
    node.loc = here();
    node.attrs = collect_attrs(atts);
    nodes.push_back(std::move(node));
    stack_.push_back(Ctx::node);
    return;
  }
  if (parent == Ctx::story && name == "edge") {
    edges.push_back(RawElement{here(), collect_attrs(atts)});
    stack_.push_back(Ctx::edge);
    return;
  }
  if (parent == Ctx::node && name == "param") {
    auto attrs = collect_attrs(atts);
    param_name_.clear();
    bool has_name = false;
    for (auto& [k, v] : attrs) {
      if (k == "name") {
        param_name_ = v;
        has_name = true;
      } else {
        unknown("unknown attribute '" + k + "' on <param>");
      }
    }
    if (!has_name) {
      errors_.push_back({Severity::error, "<param> without name attribute",
                         {}, {}, {}, here()});
    }
    param_ = Located{{}, here()};
    stack_.push_back(Ctx::param);
    return;
  }
  unknown("unexpected element <" + std::string(name) + ">");
  skip_depth_ = 1;
}

void Reader::end() {
  if (skip_depth_ > 0) {
    --skip_depth_;
    return;
  }
  if (stack_.empty()) return;
  if (stack_.back() == Ctx::param && !param_name_.empty()) {
    nodes.back().params.emplace_back(param_name_, std::move(param_));
  }
  stack_.pop_back();
  text_reported_ = false;
}

void Reader::text(std::string_view s) {
  if (skip_depth_ > 0) return;
  if (!stack_.empty() && stack_.back() == Ctx::param) {
    param_.value.append(s);
    return;
  }
  if (!is_blank(s) && !text_reported_) {
    text_reported_ = true;
    unknown("unexpected text content");
  }
}

bool Reader::run(std::string_view bytes) {
  parser_ = XML_ParserCreate("UTF-8");
  if (parser_ == nullptr) throw std::bad_alloc();
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      guard(parser_, &XML_ParserFree);
  XML_SetUserData(parser_, this);
  XML_SetElementHandler(parser_, &Reader::on_start, &Reader::on_end);
  XML_SetCharacterDataHandler(parser_, &Reader::on_text);
  XML_SetStartDoctypeDeclHandler(parser_, &Reader::on_doctype);

  constexpr std::size_t kChunk = 1 << 20;
  std::size_t offset = 0;
  do {
    const std::size_t n = std::min(kChunk, bytes.size() - offset);
    const bool last = offset + n == bytes.size();
    if (XML_Parse(parser_, bytes.data() + offset, static_cast<int>(n),
                  last ? XML_TRUE : XML_FALSE) != XML_STATUS_OK) {
      if (XML_GetErrorCode(parser_) != XML_ERROR_ABORTED) {
        errors_.push_back(
            {Severity::error,
             std::string("malformed XML: ") +
                 XML_ErrorString(XML_GetErrorCode(parser_)),
             {}, {}, {}, here()});
      }
      return false;
    }
    offset += n;
  } while (offset < bytes.size());
  return true;
}

// ---------------------------------------------------------------------------
// Schema

struct Builder {
  const ParseOptions& options;
  std::vector<Diagnostic>& errors;
  std::vector<Diagnostic>& warnings;

  void error(std::string message, SourceLocation loc) {
    errors.push_back({Severity::error, std::move(message), {}, {}, {}, loc});
  }

  void unknown(std::string message, SourceLocation loc) {
    Diagnostic d{options.lenient ? Severity::warning : Severity::error,
                 std::move(message), {}, {}, {}, loc};
    (options.lenient ? warnings : errors).push_back(std::move(d));
  }
};

// Required parameters per kind; the rest default.
struct ParamSpec {
  std::string_view name;
  bool required;
};

std::vector<ParamSpec> params_for(KindTag tag) {
  switch (tag) {
    case KindTag::text:
      return {{"content", true}, {"h-align", false}, {"v-align", false}};
    case KindTag::image:
    case KindTag::video:
      return {{"src", true}, {"position", false}, {"size", false}};
    case KindTag::audio:
      return {{"src", true}};
    case KindTag::map:
      return {{"lat", true}, {"lon", true}, {"zoom", true}};
    case KindTag::volume:
      return {{"src", true}, {"mode", false}, {"iso", false},
              {"intensity-lo", false}, {"intensity-hi", false}};
    case KindTag::slice:
      return {{"src", true}, {"axis", false}, {"index", false}};
    case KindTag::surface:
      return {{"model", true}};
    case KindTag::decision:
      return {{"prompt", true}};
  }
  return {};
}

bool has_camera(KindTag tag) {
  return tag == KindTag::volume || tag == KindTag::slice ||
         tag == KindTag::surface;
}

std::optional<StoryNode> build_node(const RawNode& raw, Builder& b,
                                    std::optional<LayoutHint>& layout) {
  const std::size_t errors_before = b.errors.size();
  std::optional<std::string> id_text, kind_text;
  std::optional<std::string> x_text, y_text, extent_text;
  std::optional<std::string> cam_pos, cam_rot, cam_zoom;
  for (const auto& [k, v] : raw.attrs) {
    if (k == "id") id_text = v;
    else if (k == "kind") kind_text = v;
    else if (k == "x") x_text = v;
    else if (k == "y") y_text = v;
    else if (k == "extent") extent_text = v;
    else if (k == "camera-pos") cam_pos = v;
    else if (k == "camera-rot") cam_rot = v;
    else if (k == "camera-zoom") cam_zoom = v;
    else b.unknown("unknown attribute '" + k + "' on <node>", raw.loc);
  }
  if (!id_text) {
    b.error("<node> without id attribute", raw.loc);
    return std::nullopt;
  }
  if (!NodeId::is_valid(*id_text)) {
    b.error("invalid node id '" + *id_text + "'", raw.loc);
    return std::nullopt;
  }
  const NodeId id(*id_text);
  const std::string who = "node '" + id.str() + "'";
  if (!kind_text) {
    b.error(who + ": missing kind attribute", raw.loc);
    return std::nullopt;
  }
  const auto tag = kind_from_name(*kind_text);
  if (!tag) {
    b.error(who + ": unknown node kind '" + *kind_text + "'", raw.loc);
    return std::nullopt;
  }

  if (x_text.has_value() != y_text.has_value()) {
    b.error(who + ": layout needs both x and y", raw.loc);
  } else if (x_text) {
    auto x = parse_double(*x_text);
    auto y = parse_double(*y_text);
    if (!x || !y) b.error(who + ": x/y must be finite numbers", raw.loc);
    else layout = LayoutHint{*x, *y};
  }

  std::optional<double> extent;
  if (extent_text) {
    extent = parse_double(*extent_text);
    if (!extent || *extent <= 0.0) {
      b.error(who + ": extent must be a positive number", raw.loc);
      extent.reset();
    }
  }

  Camera camera;
  if (!has_camera(*tag)) {
    for (const auto* attr : {&cam_pos, &cam_rot, &cam_zoom}) {
      if (attr->has_value()) {
        b.unknown(who + ": camera attributes are only valid on volume, slice "
                        "and surface nodes",
                  raw.loc);
        break;
      }
    }
  } else {
    if (cam_pos) {
      if (auto v = parse_tuple<3>(*cam_pos)) {
        camera.position = Eigen::Vector3d((*v)[0], (*v)[1], (*v)[2]);
      } else {
        b.error(who + ": camera-pos must be \"x,y,z\"", raw.loc);
      }
    }
    if (cam_rot) {
      if (auto v = parse_tuple<4>(*cam_rot)) {
        camera.rotation = Eigen::Quaterniond((*v)[0], (*v)[1], (*v)[2], (*v)[3]);
      } else {
        b.error(who + ": camera-rot must be \"w,x,y,z\"", raw.loc);
      }
    }
    if (cam_zoom) {
      if (auto v = parse_double(*cam_zoom)) camera.zoom = *v;
      else b.error(who + ": camera-zoom must be a number", raw.loc);
    }
  }

  // Params by name.
  const auto specs = params_for(*tag);
  std::map<std::string, Located, std::less<>> params;
  for (const auto& [name, value] : raw.params) {
    const bool known = std::any_of(specs.begin(), specs.end(),
                                   [&n = name](const ParamSpec& s) { return s.name == n; });
    if (!known) {
      b.unknown(who + ": unknown parameter '" + name + "' for kind '" +
                    *kind_text + "'",
                value.loc);
      continue;
    }
    if (!params.emplace(name, value).second) {
      b.error(who + ": duplicate parameter '" + name + "'", value.loc);
    }
  }
  for (const auto& spec : specs) {
    if (spec.required && params.find(spec.name) == params.end()) {
      b.error(who + ": missing required parameter '" + std::string(spec.name) + "'",
              raw.loc);
    }
  }
  if (b.errors.size() != errors_before) return std::nullopt;

  auto text = [&](std::string_view name, std::string fallback = {}) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second.value;
  };
  auto number = [&](std::string_view name, double fallback) {
    auto it = params.find(name);
    if (it == params.end()) return fallback;
    if (auto v = parse_double(it->second.value)) return *v;
    b.error(who + ": parameter '" + std::string(name) + "' must be a finite number",
            it->second.loc);
    return fallback;
  };
  auto enumerated = [&](std::string_view name, auto parser, auto fallback) {
    auto it = params.find(name);
    if (it == params.end()) return fallback;
    if (auto v = parser(trim(it->second.value))) return *v;
    b.error(who + ": invalid value '" + it->second.value + "' for parameter '" +
                std::string(name) + "'",
            it->second.loc);
    return fallback;
  };

  NodeKind kind;
  switch (*tag) {
    case KindTag::text:
      kind = Text{text("content"), enumerated("h-align", parse_h_align, HAlign::center),
                  enumerated("v-align", parse_v_align, VAlign::middle)};
      break;
    case KindTag::image:
      kind = Image{text("src"), text("position", "center"), text("size", "medium")};
      break;
    case KindTag::video:
      kind = Video{text("src"), text("position", "center"), text("size", "medium")};
      break;
    case KindTag::audio:
      kind = Audio{text("src")};
      break;
    case KindTag::map:
      kind = Map{number("lat", 0.0), number("lon", 0.0), number("zoom", 1.0)};
      break;
    case KindTag::volume:
      kind = Volume{text("src"), enumerated("mode", parse_volume_mode, VolumeMode::dvr),
                    number("iso", 0.5), number("intensity-lo", 0.0),
                    number("intensity-hi", 1.0), camera};
      break;
    case KindTag::slice: {
      std::int64_t index = 0;
      if (auto it = params.find("index"); it != params.end()) {
        if (auto v = parse_int(it->second.value)) index = *v;
        else b.error(who + ": parameter 'index' must be an integer", it->second.loc);
      }
      kind = Slice{text("src"), enumerated("axis", parse_axis, Axis::z), index, camera};
      break;
    }
    case KindTag::surface:
      kind = Surface{text("model"), camera};
      break;
    case KindTag::decision:
      kind = Decision{text("prompt")};
      break;
  }
  for (const auto& problem : check_kind(kind)) b.error(who + ": " + problem, raw.loc);
  if (b.errors.size() != errors_before) return std::nullopt;
  return StoryNode{id, std::move(kind), extent};
}

std::optional<Edge> build_edge(const RawElement& raw, Builder& b,
                               const std::set<NodeId>& known) {
  const std::size_t errors_before = b.errors.size();
  std::optional<std::string> from, to, from_port, to_port, label;
  for (const auto& [k, v] : raw.attrs) {
    if (k == "from") from = v;
    else if (k == "to") to = v;
    else if (k == "from-port") from_port = v;
    else if (k == "to-port") to_port = v;
    else if (k == "label") label = v;
    else b.unknown("unknown attribute '" + k + "' on <edge>", raw.loc);
  }
  for (auto [attr, name] : {std::pair{&from, "from"}, {&to, "to"},
                            {&from_port, "from-port"}, {&to_port, "to-port"}}) {
    if (!attr->has_value()) {
      b.error("<edge> without " + std::string(name) + " attribute", raw.loc);
    }
  }
  if (b.errors.size() != errors_before) return std::nullopt;

  Edge edge;
  for (const auto* ref : {&*from, &*to}) {
    if (!NodeId::is_valid(*ref) || known.count(NodeId(*ref)) == 0) {
      b.error("unknown node id '" + *ref + "'", raw.loc);
    }
  }
  if (*from_port == "main-out") edge.from_port = OutPort::main_out;
  else if (*from_port == "sub-out") edge.from_port = OutPort::sub_out;
  else b.error("invalid from-port '" + *from_port + "'", raw.loc);
  if (*to_port == "main-in") edge.to_port = InPort::main_in;
  else if (*to_port == "sub-in") edge.to_port = InPort::sub_in;
  else b.error("invalid to-port '" + *to_port + "'", raw.loc);
  if (b.errors.size() != errors_before) return std::nullopt;

  edge.from = NodeId(*from);
  edge.to = NodeId(*to);
  edge.label = label;
  return edge;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, ptr);
}

StoryDocument parse(std::string_view bytes, const ParseOptions& options,
                    std::vector<Diagnostic>* warnings) {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> local_warnings;
  Reader reader(options, errors, local_warnings);
  const bool well_formed = reader.run(bytes);
  auto fail = [&]() -> ParseError {
    if (warnings) warnings->insert(warnings->end(), local_warnings.begin(), local_warnings.end());
    return ParseError(errors);
  };
  if (!well_formed || !reader.story) {
    if (errors.empty()) errors.push_back({Severity::error, "empty document", {}, {}, {}, SourceLocation{1, 1}});
    throw fail();
  }

  Builder b{options, errors, local_warnings};
  StoryDocument doc;
  const SourceLocation story_loc = reader.story->loc;
  std::optional<std::string> version_text;
  for (const auto& [k, v] : reader.story->attrs) {
    if (k == "version") version_text = v;
    else b.unknown("unknown attribute '" + k + "' on <story>", story_loc);
  }
  if (!version_text) {
    b.error("<story> without version attribute", story_loc);
    throw fail();
  }
  const auto version = parse_int(*version_text);
  if (!version || *version < 1) {
    b.error("invalid format version '" + *version_text + "'", story_loc);
    throw fail();
  }
  if (*version != kStoryFormatVersion) {
    b.error("unsupported format version " + std::to_string(*version), story_loc);
    throw fail();
  }
  doc.format_version = static_cast<int>(*version);

  std::vector<StoryNode> nodes;
  std::map<NodeId, SourceLocation> node_locs;
  for (const auto& raw : reader.nodes) {
    std::optional<LayoutHint> hint;
    auto node = build_node(raw, b, hint);
    if (!node) continue;
    if (!node_locs.emplace(node->id, raw.loc).second) {
      b.error("duplicate node id '" + node->id.str() + "'", raw.loc);
      continue;
    }
    if (hint) doc.layout.emplace(node->id, *hint);
    nodes.push_back(std::move(*node));
  }
  std::set<NodeId> known;
  for (const auto& [id, loc] : node_locs) known.insert(id);
  std::vector<Edge> edges;
  std::vector<SourceLocation> edge_locs;
  for (const auto& raw : reader.edges) {
    if (auto edge = build_edge(raw, b, known)) {
      edges.push_back(std::move(*edge));
      edge_locs.push_back(raw.loc);
    }
  }
  if (!errors.empty()) throw fail();

  doc.graph = StoryGraph::from_parts(std::move(nodes), std::move(edges));
  for (auto& d : validate(doc.graph)) {
    if (d.node) d.location = node_locs.at(*d.node);
    else if (d.edge) d.location = edge_locs.at(*d.edge);
    else d.location = story_loc;
    (d.is_error() ? errors : local_warnings).push_back(std::move(d));
  }
  if (!errors.empty()) throw fail();
  if (warnings) warnings->insert(warnings->end(), local_warnings.begin(), local_warnings.end());
  return doc;
}

namespace {

std::string camera_attrs(const Camera& c) {
  const auto& q = c.rotation;
  return " camera-pos=\"" + format_number(c.position.x()) + "," +
         format_number(c.position.y()) + "," + format_number(c.position.z()) +
         "\" camera-rot=\"" + format_number(q.w()) + "," + format_number(q.x()) +
         "," + format_number(q.y()) + "," + format_number(q.z()) +
         "\" camera-zoom=\"" + format_number(c.zoom) + "\"";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::pair<std::string_view, std::string>> params_of(const NodeKind& kind) {
  using P = std::vector<std::pair<std::string_view, std::string>>;
  return std::visit(
      overloaded{
          [](const Text& k) -> P {
            return {{"content", k.content},
                    {"h-align", std::string(to_string(k.h_align))},
                    {"v-align", std::string(to_string(k.v_align))}};
          },
          [](const Image& k) -> P {
            return {{"src", k.src}, {"position", k.position}, {"size", k.size}};
          },
          [](const Video& k) -> P {
            return {{"src", k.src}, {"position", k.position}, {"size", k.size}};
          },
          [](const Audio& k) -> P { return {{"src", k.src}}; },
          [](const Map& k) -> P {
            return {{"lat", format_number(k.lat)},
                    {"lon", format_number(k.lon)},
                    {"zoom", format_number(k.zoom_level)}};
          },
          [](const Volume& k) -> P {
            return {{"src", k.src},
                    {"mode", std::string(to_string(k.mode))},
                    {"iso", format_number(k.iso_value)},
                    {"intensity-lo", format_number(k.intensity_lo)},
                    {"intensity-hi", format_number(k.intensity_hi)}};
          },
          [](const Slice& k) -> P {
            return {{"src", k.src},
                    {"axis", std::string(to_string(k.axis))},
                    {"index", std::to_string(k.index)}};
          },
          [](const Surface& k) -> P { return {{"model", k.model_ref}}; },
          [](const Decision& k) -> P { return {{"prompt", k.prompt}}; }},
      kind);
}

}  // namespace

std::string emit(const StoryDocument& doc) {
  if (doc.format_version != kStoryFormatVersion) {
    throw Error("cannot emit format version " + std::to_string(doc.format_version));
  }
  auto diagnostics = validate(doc.graph);
  if (count_errors(diagnostics) > 0) throw GraphError(std::move(diagnostics));
  for (const auto& [id, hint] : doc.layout) {
    if (!doc.graph.contains(id)) {
      throw Error("layout hint for unknown node '" + id.str() + "'");
    }
    if (!std::isfinite(hint.x) || !std::isfinite(hint.y)) {
      throw Error("layout hint for node '" + id.str() + "' is not finite");
    }
  }

  std::string out = "<story version=\"" + std::to_string(doc.format_version) + "\">\n";
  for (const auto& [id, node] : doc.graph.nodes()) {
    out += "  <node id=\"" + escape_attr(id.str()) + "\" kind=\"" +
           std::string(kind_name(kind_tag(node.kind))) + "\"";
    if (auto it = doc.layout.find(id); it != doc.layout.end()) {
      out += " x=\"" + format_number(it->second.x) + "\" y=\"" +
             format_number(it->second.y) + "\"";
    }
    if (node.extent_override) {
      out += " extent=\"" + format_number(*node.extent_override) + "\"";
    }
    if (const Camera* camera = camera_of(node.kind)) out += camera_attrs(*camera);
    out += ">\n";
    for (const auto& [name, value] : params_of(node.kind)) {
      out += "    <param name=\"" + std::string(name) + "\">" + escape_text(value) +
             "</param>\n";
    }
    out += "  </node>\n";
  }
  for (const auto& e : doc.graph.canonical_edges()) {
    out += "  <edge from=\"" + escape_attr(e.from.str()) + "\" from-port=\"" +
           std::string(to_string(e.from_port)) + "\" to=\"" + escape_attr(e.to.str()) +
           "\" to-port=\"" + std::string(to_string(e.to_port)) + "\"";
    if (e.label) out += " label=\"" + escape_attr(*e.label) + "\"";
    out += "/>\n";
  }
  out += "</story>\n";
  return out;
}

StoryDocument read_story_file(const std::filesystem::path& path,
                              const ParseOptions& options,
                              std::vector<Diagnostic>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), options, warnings);
}

}  // namespace scrolly
