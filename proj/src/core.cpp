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

#include "scrolly/core.hpp"

#include <algorithm>
#include <utility>

namespace scrolly {

namespace {

bool is_id_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

std::string first_message(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.is_error()) return d.format();
  }
  return diagnostics.empty() ? std::string("invalid input")
                             : diagnostics.front().format();
}

}  // namespace

NodeId::NodeId(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw GraphError("invalid node id '" + value_ +
                     "' (expected nonempty [A-Za-z0-9_.-])");
  }
}

bool NodeId::is_valid(std::string_view value) {
  return !value.empty() && std::all_of(value.begin(), value.end(), is_id_char);
}

std::ostream& operator<<(std::ostream& os, const NodeId& id) {
  return os << id.str();
}

std::string Diagnostic::format() const {
  std::string out = severity == Severity::error ? "error: " : "warning: ";
  out += message;
  if (location) {
    out += " at line " + std::to_string(location->line) + ", column " +
           std::to_string(location->column);
  }
  return out;
}

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics) {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(),
      [](const Diagnostic& d) { return d.is_error(); }));
}

std::size_t count_warnings(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.size() - count_errors(diagnostics);
}

GraphError::GraphError(const std::string& message) : Error(message) {
  diagnostics_.push_back(Diagnostic{Severity::error, message, {}, {}, {}, {}});
}

GraphError::GraphError(std::vector<Diagnostic> diagnostics)
    : Error(first_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(first_message(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace scrolly
