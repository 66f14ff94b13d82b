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


#include "scrolly/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scrolly/descriptor.hpp"
#include "scrolly/samples.hpp"
#include "scrolly/site_compiler.hpp"
#include "scrolly/story_xml.hpp"
#include "scrolly/timeline.hpp"
#include "scrolly/tree_builder.hpp"

namespace scrolly::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TimelineFlags {
  double node_extent = TimelineConfig{}.node_extent_px;
  double window = TimelineConfig{}.transition_window_px;
  std::string easing = "linear";

  void attach(CLI::App* cmd) {
    cmd->add_option("--node-extent", node_extent, "Default step extent in px")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--transition-window", window,
                    "Crossfade window centered on each boundary, in px")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--easing", easing, "Window easing")
        ->check(CLI::IsMember({"linear", "smoothstep"}));
  }

  TimelineConfig config() const {
    TimelineConfig c{node_extent, window, *parse_easing(easing)};
    c.validate();
    return c;
  }
};

json diagnostic_json(const Diagnostic& d) {
  json j{{"severity", d.is_error() ? "error" : "warning"}, {"message", d.message}};
  if (d.node) j["node"] = d.node->str();
  if (d.edge) j["edge"] = *d.edge;
  if (d.path) j["path"] = *d.path;
  if (d.location) {
    j["line"] = d.location->line;
    j["column"] = d.location->column;
  }
  return j;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) err << d.format() << '\n';
}

// Parses a story file. On failure the diagnostics are collected and nullopt
// is returned.
std::optional<StoryDocument> load(const fs::path& file, bool lenient,
                                  std::vector<Diagnostic>& diags) {
  try {
    return read_story_file(file, ParseOptions{lenient}, &diags);
  } catch (const ParseError& e) {
    diags.insert(diags.end(), e.diagnostics().begin(), e.diagnostics().end());
  } catch (const Error& e) {
    diags.push_back(Diagnostic{Severity::error, e.what(), {}, {}, file.string(), {}});
  }
  return std::nullopt;
}

int cmd_validate(const fs::path& file, bool lenient, const std::string& format,
                 std::ostream& out, std::ostream& err) {
  std::vector<Diagnostic> diags;
  load(file, lenient, diags);
  const auto errors = count_errors(diags);
  const auto warnings = count_warnings(diags);
  if (format == "json") {
    json list = json::array();
    for (const auto& d : diags) list.push_back(diagnostic_json(d));
    out << json{{"errors", errors}, {"warnings", warnings}, {"diagnostics", list}}
               .dump(2)
        << '\n';
  } else {
    print_diagnostics(diags, err);
    out << errors << (errors == 1 ? " error, " : " errors, ") << warnings
        << (warnings == 1 ? " warning" : " warnings") << '\n';
  }
  return errors == 0 ? kExitOk : kExitErrors;
}

struct CompileFlags {
  fs::path file, assets, out;
  bool zip = false;
  bool lenient = false;
  std::string runtime;
  std::string title;
  TimelineFlags timeline;
};

int cmd_compile(const CompileFlags& flags, std::ostream& out, std::ostream& err) {
  CompileConfig config;
  try {
    config.timeline = flags.timeline.config();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.output = flags.zip ? OutputKind::zip : OutputKind::directory;
  config.title = flags.title.empty() ? flags.file.stem().stem().string() : flags.title;
  if (!flags.runtime.empty()) {
    config.runtime_bundle_path = flags.runtime;
  } else if (const char* env = std::getenv("SCROLLY_RUNTIME"); env && *env) {
    config.runtime_bundle_path = env;
  }

  std::vector<Diagnostic> diags;
  auto doc = load(flags.file, flags.lenient, diags);
  print_diagnostics(diags, err);
  if (!doc) return kExitErrors;
  try {
    const SiteBundle bundle = compile(*doc, flags.assets, config);
    const auto problems = link_check(bundle);
    if (!problems.empty()) {
      print_diagnostics(problems, err);
      return kExitErrors;
    }
    write_bundle(bundle, flags.out, config.output);
    out << "wrote " << bundle.files.size() << " files to " << flags.out.string()
        << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitErrors;
  }
  return kExitOk;
}

struct InspectFlags {
  fs::path file;
  bool paths = false, tree = false, stats = false, lenient = false;
  std::string format = "text";
  TimelineFlags timeline;
};

std::string join_ids(const std::vector<NodeId>& ids) {
  std::string s;
  for (const auto& id : ids) {
    if (!s.empty()) s += ' ';
    s += id.str();
  }
  return s;
}

std::size_t step_count(const StoryTree& tree, const std::vector<SegmentId>& path) {
  std::size_t n = 0;
  for (const auto& id : path) n += tree.segment(id).steps.size();
  return n;
}

// Segments from the root down, children in option order.
std::vector<SegmentId> preorder(const StoryTree& tree) {
  std::vector<SegmentId> order;
  std::vector<SegmentId> stack{tree.root};
  while (!stack.empty()) {
    SegmentId id = stack.back();
    stack.pop_back();
    const auto& children = tree.children_of(id);
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(it->id);
    order.push_back(std::move(id));
  }
  return order;
}

json stats_json(const Timeline& timeline,
                const std::vector<std::vector<SegmentId>>& paths) {
  const auto& tree = timeline.tree;
  std::map<std::string, std::size_t> kinds;
  for (const auto& [id, node] : tree.graph.nodes()) {
    ++kinds[std::string(kind_name(kind_tag(node.kind)))];
  }
  std::size_t steps = 0, decisions = 0;
  for (const auto& [id, seg] : tree.segments) {
    steps += seg.steps.size();
    if (seg.decision) ++decisions;
  }
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const double h = path_height(timeline, paths[i]);
    lo = i == 0 ? h : std::min(lo, h);
    hi = i == 0 ? h : std::max(hi, h);
  }
  return json{{"nodes", tree.graph.node_count()},
              {"edges", tree.graph.edges().size()},
              {"segments", tree.segments.size()},
              {"steps", steps},
              {"decisions", decisions},
              {"paths", paths.size()},
              {"minPathHeightPx", lo},
              {"maxPathHeightPx", hi},
              {"kinds", kinds}};
}

int cmd_inspect(const InspectFlags& flags, std::ostream& out, std::ostream& err) {
  TimelineConfig config;
  try {
    config = flags.timeline.config();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<Diagnostic> diags;
  auto doc = load(flags.file, flags.lenient, diags);
  print_diagnostics(diags, err);
  if (!doc) return kExitErrors;

  Timeline timeline;
  try {
    timeline = plan(build_tree(doc->graph), config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitErrors;
  }
  const auto& tree = timeline.tree;
  const auto paths = enumerate_paths(tree);

  if (flags.format == "json") {
    json j = to_json(make_descriptor(timeline, flags.file.stem().stem().string()));
    json list = json::array();
    for (const auto& path : paths) {
      json ids = json::array();
      for (const auto& id : path) ids.push_back(id.str());
      list.push_back(json{{"segments", ids},
                          {"steps", step_count(tree, path)},
                          {"heightPx", path_height(timeline, path)}});
    }
    j["paths"] = list;
    j["stats"] = stats_json(timeline, paths);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  const bool all = !flags.paths && !flags.tree && !flags.stats;
  if (all || flags.tree) {
    for (const auto& id : preorder(tree)) {
      const auto& seg = tree.segment(id);
      out << "segment " << id.str() << " (" << kind_name(seg.kind_icon) << ", "
          << seg.steps.size() << (seg.steps.size() == 1 ? " step" : " steps")
          << ")\n";
      for (std::size_t i = 0; i < seg.steps.size(); ++i) {
        out << "  step " << i + 1 << ": " << join_ids(seg.steps[i].layers) << " ["
            << format_number(timeline.extent_of(seg.steps[i].owner())) << " px]\n";
      }
      for (const auto& child : tree.children_of(id)) {
        out << "  -> " << child.id.str();
        if (child.label) out << " \"" << *child.label << '"';
        out << '\n';
      }
    }
  }
  if (all || flags.paths) {
    out << paths.size() << (paths.size() == 1 ? " path\n" : " paths\n");
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::vector<NodeId> heads;
      for (const auto& id : paths[i]) heads.push_back(id.head());
      out << "path " << i + 1 << ": " << join_ids(heads) << " ("
          << step_count(tree, paths[i]) << " steps, "
          << format_number(path_height(timeline, paths[i])) << " px)\n";
    }
  }
  if (all || flags.stats) {
    const json s = stats_json(timeline, paths);
    for (const auto& [key, value] : s.items()) {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_new(const fs::path& dir, std::ostream& out, std::ostream& err) {
  try {
    const auto story = samples::write_demo_project(dir);
    out << "created " << story.string() << '\n'
        << "next: scrolly compile " << story.string() << " --assets "
        << dir.string() << " --out " << (dir / "site").string() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitErrors;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile branching scrollytelling stories into static web pages.",
               "scrolly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "scrolly 0.1.0");

  fs::path validate_file;
  bool validate_lenient = false;
  std::string validate_format = "text";
  auto* validate = app.add_subcommand("validate", "Check a story file");
  validate->add_option("file", validate_file, "Story file")->required();
  validate->add_flag("--lenient", validate_lenient, "Skip unknown constructs");
  validate->add_option("--format", validate_format)
      ->check(CLI::IsMember({"text", "json"}));

  CompileFlags compile_flags;
  auto* compile_cmd = app.add_subcommand("compile", "Build a self-contained site");
  compile_cmd->add_option("file", compile_flags.file, "Story file")->required();
  compile_cmd->add_option("--assets", compile_flags.assets, "Asset root")->required();
  compile_cmd->add_option("--out", compile_flags.out,
                          "Output directory, or archive path with --zip")
      ->required();
  compile_cmd->add_flag("--zip", compile_flags.zip, "Write a zip archive");
  compile_cmd->add_option("--runtime", compile_flags.runtime,
                          "Prebuilt runtime.js (default: $SCROLLY_RUNTIME)");
  compile_cmd->add_option("--title", compile_flags.title, "Page title");
  compile_cmd->add_flag("--lenient", compile_flags.lenient, "Skip unknown constructs");
  compile_flags.timeline.attach(compile_cmd);

  InspectFlags inspect_flags;
  auto* inspect = app.add_subcommand("inspect", "Print segments, paths and heights");
  inspect->add_option("file", inspect_flags.file, "Story file")->required();
  inspect->add_flag("--paths", inspect_flags.paths, "Root-to-leaf paths");
  inspect->add_flag("--tree", inspect_flags.tree, "Segments and step stacks");
  inspect->add_flag("--stats", inspect_flags.stats, "Summary counts");
  inspect->add_flag("--lenient", inspect_flags.lenient, "Skip unknown constructs");
  inspect->add_option("--format", inspect_flags.format)
      ->check(CLI::IsMember({"text", "json"}));
  inspect_flags.timeline.attach(inspect);

  fs::path new_dir;
  auto* scaffold = app.add_subcommand("new", "Scaffold a sample story");
  scaffold->add_option("dir", new_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*validate) return cmd_validate(validate_file, validate_lenient, validate_format, out, err);
  if (*compile_cmd) return cmd_compile(compile_flags, out, err);
  if (*inspect) return cmd_inspect(inspect_flags, out, err);
  return cmd_new(new_dir, out, err);
}

}  // namespace scrolly::cli
