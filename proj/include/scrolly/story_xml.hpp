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

#ifndef SCROLLY_STORY_XML_HPP_
#define SCROLLY_STORY_XML_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scrolly/story_model.hpp"

namespace scrolly {

inline constexpr int kStoryFormatVersion = 1;

/// Editor canvas position of a node. Carried through untouched.
struct LayoutHint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const LayoutHint&) const = default;
};

struct StoryDocument {
  StoryGraph graph;
  std::map<NodeId, LayoutHint> layout;
  int format_version = kStoryFormatVersion;
  bool operator==(const StoryDocument&) const = default;
};

struct ParseOptions {
  /// Skip unknown elements, attributes and params with a warning instead of
  /// rejecting the document.
  bool lenient = false;
};

/// Reads a `.story.xml` document. Throws ParseError carrying every error
/// found (each with line/column); warnings go to `warnings` when given.
StoryDocument parse(std::string_view bytes, const ParseOptions& options = {},
                    std::vector<Diagnostic>* warnings = nullptr);

/// Canonical serialization: nodes by id, edges by (from, from-port) keeping
/// authored option order, fixed attribute and param order, LF endings.
std::string emit(const StoryDocument& doc);

StoryDocument read_story_file(const std::filesystem::path& path,
                              const ParseOptions& options = {},
                              std::vector<Diagnostic>* warnings = nullptr);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double value);

}  // namespace scrolly

#endif  // SCROLLY_STORY_XML_HPP_
