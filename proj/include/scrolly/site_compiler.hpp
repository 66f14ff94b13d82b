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

#ifndef SCROLLY_SITE_COMPILER_HPP_
#define SCROLLY_SITE_COMPILER_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrolly/descriptor.hpp"
#include "scrolly/story_xml.hpp"
#include "scrolly/timeline.hpp"

namespace scrolly {

enum class OutputKind { directory, zip };

struct CompileConfig {
  TimelineConfig timeline;
  OutputKind output = OutputKind::directory;
  /// Prebuilt browser runtime; the embedded placeholder runtime otherwise.
  std::optional<std::filesystem::path> runtime_bundle_path;
  std::string title = "Story";
};

struct ManifestEntry {
  std::string path;
  std::size_t size = 0;
  std::string checksum;  // lowercase hex SHA-256
  bool operator==(const ManifestEntry&) const = default;
};

/// A deployable website: relative path -> file bytes.
struct SiteBundle {
  std::map<std::string, std::string> files;
  std::vector<ManifestEntry> manifest;  // sorted by path

  bool operator==(const SiteBundle&) const = default;
};

std::string sha256_hex(std::string_view bytes);

std::vector<ManifestEntry> make_manifest(const std::map<std::string, std::string>& files);

/// Builds index.html, style.css, story.json, runtime.js and content-addressed
/// copies of every referenced asset. Media paths are resolved against
/// `assets_root` and must stay inside it.
SiteBundle compile(const StoryDocument& doc,
                   const std::filesystem::path& assets_root,
                   const CompileConfig& config);

/// Writes a directory tree or a single stored zip archive. Output bytes
/// depend only on the bundle.
void write_bundle(const SiteBundle& bundle,
                  const std::filesystem::path& destination, OutputKind kind);

/// Reads a bundle back from a directory written by write_bundle.
SiteBundle load_bundle(const std::filesystem::path& directory);

/// Checks that every intra-bundle reference resolves, checksums match and no
/// asset is orphaned. Empty on success.
std::vector<Diagnostic> link_check(const SiteBundle& bundle);

/// Deterministic zip archive (stored entries, fixed timestamps).
std::string make_zip(const std::map<std::string, std::string>& files);

namespace resources {
std::string_view index_html_template();
std::string_view style_css();
std::string_view placeholder_runtime_js();
}  // namespace resources

}  // namespace scrolly

#endif  // SCROLLY_SITE_COMPILER_HPP_
