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

#include "scrolly/site_compiler.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <system_error>

namespace scrolly {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_file(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("cannot write " + path.string());
}

// A reference that stays inside the bundle or asset root.
bool is_relative_reference(std::string_view ref) {
  if (ref.empty() || ref.front() == '/' || ref.front() == '\\') return false;
  if (ref.find("://") != std::string_view::npos) return false;
  if (ref.size() >= 2 && ref[1] == ':') return false;  // drive letter
  if (ref.find('\\') != std::string_view::npos) return false;
  std::string_view rest = ref;
  while (!rest.empty()) {
    const auto slash = rest.find('/');
    const auto part = rest.substr(0, slash);
    if (part == ".." || part.empty()) return false;
    if (slash == std::string_view::npos) break;
    rest.remove_prefix(slash + 1);
  }
  return true;
}

std::string extension_of(const std::string& src) {
  std::string ext = fs::path(src).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const bool clean = std::all_of(ext.begin(), ext.end(), [](char c) {
    return c == '.' || std::isalnum(static_cast<unsigned char>(c));
  });
  return clean ? ext : std::string();
}

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_index(const std::string& title) {
  std::string html(resources::index_html_template());
  const std::string token = "{{TITLE}}";
  for (auto pos = html.find(token); pos != std::string::npos;
       pos = html.find(token, pos)) {
    const std::string escaped = html_escape(title);
    html.replace(pos, token.size(), escaped);
    pos += escaped.size();
  }
  return html;
}

Diagnostic bundle_error(std::string message, std::string path) {
  return {Severity::error, std::move(message), {}, {}, std::move(path), {}};
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0F]);
  }
  return out;
}

std::vector<ManifestEntry> make_manifest(const std::map<std::string, std::string>& files) {
  std::vector<ManifestEntry> out;
  out.reserve(files.size());
  for (const auto& [path, bytes] : files) {
    out.push_back({path, bytes.size(), sha256_hex(bytes)});
  }
  return out;
}

SiteBundle compile(const StoryDocument& doc, const fs::path& assets_root,
                   const CompileConfig& config) {
  const Timeline timeline = plan(build_tree(doc.graph), config.timeline);

  SiteBundle bundle;
  std::map<NodeId, std::string> asset_paths;
  std::vector<std::string> problems;
  for (const auto& [id, node] : doc.graph.nodes()) {
    const auto src = data_source(node.kind);
    if (!src) continue;
    if (!is_relative_reference(*src)) {
      problems.push_back("node " + id.str() + ": asset path '" + *src +
                         "' must be relative and stay inside the asset root");
      continue;
    }
    const fs::path file = assets_root / *src;
    std::error_code ec;
    if (!fs::is_regular_file(file, ec)) {
      problems.push_back("node " + id.str() + ": asset not found: " + *src);
      continue;
    }
    std::string bytes;
    try {
      bytes = read_file(file);
    } catch (const IoError&) {
      problems.push_back("node " + id.str() + ": asset not readable: " + *src);
      continue;
    }
    const std::string name = "assets/" + sha256_hex(bytes) + extension_of(*src);
    asset_paths.emplace(id, name);
    bundle.files.emplace(name, std::move(bytes));
  }
  if (!problems.empty()) {
    std::string message = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) message += "; " + problems[i];
    throw CompileError(message);
  }

  std::string runtime;
  if (config.runtime_bundle_path) {
    try {
      runtime = read_file(*config.runtime_bundle_path);
    } catch (const IoError&) {
      throw CompileError("unreadable runtime bundle: " +
                         config.runtime_bundle_path->string());
    }
  } else {
    runtime = std::string(resources::placeholder_runtime_js());
  }

  std::string descriptor;
  try {
    descriptor = serialize(make_descriptor(timeline, config.title, asset_paths));
  } catch (const nlohmann::json::exception& e) {
    throw CompileError(std::string("story descriptor serialization failed: ") + e.what());
  }

  bundle.files["index.html"] = render_index(config.title);
  bundle.files["style.css"] = std::string(resources::style_css());
  bundle.files["story.json"] = std::move(descriptor);
  bundle.files["runtime.js"] = std::move(runtime);
  bundle.manifest = make_manifest(bundle.files);
  return bundle;
}

void write_bundle(const SiteBundle& bundle, const fs::path& destination,
                  OutputKind kind) {
  std::error_code ec;
  if (kind == OutputKind::zip) {
    if (destination.has_parent_path()) {
      fs::create_directories(destination.parent_path(), ec);
      if (ec) {
        throw IoError("cannot create " + destination.parent_path().string() + ": " +
                      ec.message());
      }
    }
    write_file(destination, make_zip(bundle.files));
    return;
  }
  fs::create_directories(destination, ec);
  if (ec || !fs::is_directory(destination)) {
    throw IoError("cannot create " + destination.string() +
                  (ec ? ": " + ec.message() : std::string()));
  }
  for (const auto& [relative, bytes] : bundle.files) {
    if (!is_relative_reference(relative)) {
      throw IoError("refusing to write outside the bundle: " + relative);
    }
    const fs::path target = destination / relative;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create " + target.parent_path().string() + ": " +
                    ec.message());
    }
    write_file(target, bytes);
  }
}

SiteBundle load_bundle(const fs::path& directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw IoError("not a directory: " + directory.string());
  }
  SiteBundle bundle;
  for (fs::recursive_directory_iterator it(directory, ec), end; it != end;
       it.increment(ec)) {
    if (ec) throw IoError("cannot list " + directory.string() + ": " + ec.message());
    if (!it->is_regular_file()) continue;
    const std::string relative =
        fs::relative(it->path(), directory).generic_string();
    bundle.files.emplace(relative, read_file(it->path()));
  }
  bundle.manifest = make_manifest(bundle.files);
  return bundle;
}

std::vector<Diagnostic> link_check(const SiteBundle& bundle) {
  std::vector<Diagnostic> out;
  const auto& files = bundle.files;

  if (files.count("index.html") == 0) {
    out.push_back(bundle_error("bundle has no index.html", "index.html"));
  }

  // Manifest consistency.
  std::set<std::string> listed;
  for (const auto& entry : bundle.manifest) {
    listed.insert(entry.path);
    auto it = files.find(entry.path);
    if (it == files.end()) {
      out.push_back(bundle_error("manifest lists missing file " + entry.path, entry.path));
    } else if (it->second.size() != entry.size || sha256_hex(it->second) != entry.checksum) {
      out.push_back(bundle_error("checksum mismatch for " + entry.path, entry.path));
    }
  }
  for (const auto& [path, bytes] : files) {
    if (listed.count(path) == 0) {
      out.push_back(bundle_error("file missing from manifest: " + path, path));
    }
  }

  auto check_reference = [&](const std::string& from, const std::string& ref) {
    if (!is_relative_reference(ref)) {
      out.push_back(bundle_error(from + ": non-relative reference '" + ref + "'", from));
    } else if (files.count(ref) == 0) {
      out.push_back(bundle_error(from + ": unresolved reference '" + ref + "'", from));
    }
  };

  if (auto index = files.find("index.html"); index != files.end()) {
    static const std::regex kRef(R"re((?:src|href|data-story)="([^"]*)")re");
    for (std::sregex_iterator it(index->second.begin(), index->second.end(), kRef), end;
         it != end; ++it) {
      check_reference("index.html", (*it)[1].str());
    }
  }

  std::set<std::string> referenced;
  if (auto story = files.find("story.json"); story == files.end()) {
    out.push_back(bundle_error("bundle has no story.json", "story.json"));
  } else {
    try {
      const auto j = nlohmann::json::parse(story->second);
      for (const auto& [id, layer] : j.at("layers").items()) {
        if (!layer.contains("asset") || layer.at("asset").is_null()) continue;
        const auto ref = layer.at("asset").get<std::string>();
        referenced.insert(ref);
        check_reference("story.json", ref);
      }
    } catch (const nlohmann::json::exception& e) {
      out.push_back(bundle_error(std::string("story.json unreadable: ") + e.what(),
                                 "story.json"));
    }
  }
  for (const auto& [path, bytes] : files) {
    if (path.rfind("assets/", 0) == 0 && referenced.count(path) == 0) {
      out.push_back(bundle_error("orphan asset " + path, path));
    }
  }
  return out;
}

}  // namespace scrolly
