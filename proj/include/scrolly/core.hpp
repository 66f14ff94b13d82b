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

#ifndef SCROLLY_CORE_HPP_
#define SCROLLY_CORE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scrolly {

/// Identifier of a story node. Nonempty, restricted to [A-Za-z0-9_.-].
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value);

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  static bool is_valid(std::string_view value);

  auto operator<=>(const NodeId&) const = default;

 private:
  std::string value_;
};

std::ostream& operator<<(std::ostream& os, const NodeId& id);

enum class Severity { error, warning };

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
  bool operator==(const SourceLocation&) const = default;
};

/// A finding about a story graph, an input document or an emitted bundle.
/// At most one of node / edge / path is usually set; edge is an index into
/// StoryGraph::edges().
struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  std::optional<NodeId> node;
  std::optional<std::size_t> edge;
  std::optional<std::string> path;
  std::optional<SourceLocation> location;

  bool is_error() const { return severity == Severity::error; }

  /// "error: <message> at line L, column C"
  std::string format() const;

  bool operator==(const Diagnostic&) const = default;
};

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics);
std::size_t count_warnings(const std::vector<Diagnostic>& diagnostics);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected graph mutation or an invalid graph handed to a compiler pass.
class GraphError : public Error {
 public:
  explicit GraphError(const std::string& message);
  explicit GraphError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace scrolly

#endif  // SCROLLY_CORE_HPP_
