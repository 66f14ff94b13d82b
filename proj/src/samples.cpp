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


#include "scrolly/samples.hpp"

#include <fstream>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace scrolly::samples {

namespace fs = std::filesystem;

namespace {

StoryNode make(const char* id, NodeKind kind) {
  return StoryNode{NodeId(id), std::move(kind), std::nullopt};
}

Edge main_edge(const char* from, const char* to,
               std::optional<std::string> label = {}) {
  return Edge{NodeId(from), OutPort::main_out, NodeId(to), InPort::main_in,
              std::move(label)};
}

Edge sub_edge(const char* from, const char* to) {
  return Edge{NodeId(from), OutPort::sub_out, NodeId(to), InPort::sub_in,
              std::nullopt};
}

Camera orbit(double yaw_deg, double distance, double zoom) {
  const double yaw = yaw_deg * std::numbers::pi / 180.0;
  Camera c;
  c.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitY()));
  c.position = c.rotation * Eigen::Vector3d(0.0, 0.0, distance);
  c.zoom = zoom;
  return c;
}

StoryDocument with_layout(StoryGraph graph) {
  StoryDocument doc;
  double y = 0.0;
  for (const auto& [id, node] : graph.nodes()) {
    doc.layout[id] = LayoutHint{0.0, y};
    y += 120.0;
  }
  doc.graph = std::move(graph);
  return doc;
}

void write_text(const fs::path& path, std::string_view bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

std::string placeholder_svg(std::string_view caption) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"400\" viewBox=\"0 0 640 400\">\n"
         "<rect width=\"640\" height=\"400\" fill=\"#c9b79c\"/>\n"
         "<text x=\"320\" y=\"210\" font-family=\"sans-serif\" "
         "font-size=\"28\" text-anchor=\"middle\">" +
         std::string(caption) + "</text>\n</svg>\n";
}

}  // namespace

StoryDocument layered_document() {
  std::vector<StoryNode> nodes{
      make("A", Image{"assets/a.png", "center", "large"}),
      make("B", Text{"B is shown on top of A.", HAlign::left, VAlign::top}),
      make("C", Text{"C joins A and B.", HAlign::left, VAlign::bottom}),
      make("D", Image{"assets/d.png", "right", "medium"}),
      make("E", Text{"E closes the story.", HAlign::center, VAlign::middle}),
  };
  std::vector<Edge> edges{sub_edge("A", "B"), sub_edge("B", "C"),
                          main_edge("B", "D"), main_edge("A", "E")};
  return with_layout(StoryGraph::from_parts(std::move(nodes), std::move(edges)));
}

StoryDocument demo_document() {
  const std::string enclosure = "models/great-enclosure.glb";
  std::vector<StoryNode> nodes{
      make("title", Text{"Unearthing the truth: the builders of Great Zimbabwe",
                         HAlign::center, VAlign::middle}),
      make("map_region", Map{-19.0, 29.8, 5.0}),
      make("map_site", Map{-20.2715, 30.9335, 15.0}),
      make("map_caption",
           Text{"The ruins lie on a granite plateau south of Masvingo.",
                HAlign::left, VAlign::bottom}),
      make("enclosure_wide", Surface{enclosure, orbit(0.0, 120.0, 1.0)}),
      make("enclosure_wall", Surface{enclosure, orbit(75.0, 40.0, 1.6)}),
      make("narration", Audio{"assets/narration.mp3"}),
      make("choice", Decision{"Where do you want to go next?"}),
      make("hill_complex",
           Surface{"models/hill-complex.glb", orbit(-30.0, 90.0, 1.0)}),
      make("excavation", Image{"assets/excavation.svg", "center", "large"}),
  };
  std::vector<Edge> edges{
      main_edge("title", "map_region"),
      main_edge("map_region", "map_site"),
      sub_edge("map_site", "map_caption"),
      main_edge("map_site", "enclosure_wide"),
      main_edge("enclosure_wide", "enclosure_wall"),
      sub_edge("enclosure_wall", "narration"),
      main_edge("enclosure_wall", "choice"),
      main_edge("choice", "hill_complex", "The Hill Complex"),
      main_edge("choice", "excavation", "The excavations"),
  };
  return with_layout(StoryGraph::from_parts(std::move(nodes), std::move(edges)));
}

fs::path write_demo_project(const fs::path& dir) {
  const fs::path story = dir / "demo.story.xml";
  if (fs::exists(story)) throw IoError(story.string() + " already exists");
  write_text(story, emit(demo_document()));
  write_text(dir / "assets" / "excavation.svg",
             placeholder_svg("Excavation trench (placeholder)"));
  // Stand-ins; replace with real media before publishing.
  write_text(dir / "assets" / "narration.mp3", "placeholder audio\n");
  write_text(dir / "models" / "great-enclosure.glb", "placeholder model\n");
  write_text(dir / "models" / "hill-complex.glb", "placeholder model 2\n");
  return story;
}

}  // namespace scrolly::samples
