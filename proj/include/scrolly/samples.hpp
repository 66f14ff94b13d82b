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


#ifndef SCROLLY_SAMPLES_HPP_
#define SCROLLY_SAMPLES_HPP_

#include <filesystem>

#include "scrolly/story_xml.hpp"

namespace scrolly::samples {

/// Five nodes A..E: A sub B, B sub C, B main D, A main E. A and D are images
/// reading assets/a.png and assets/d.png; the rest are text.
StoryDocument layered_document();

/// A ten-node archaeology story: title, two maps, two views of one surface
/// model with narration, and a decision between two endings.
StoryDocument demo_document();

/// Writes demo.story.xml plus placeholder assets under `dir`, which must not
/// already contain a story file. Returns the story file path.
std::filesystem::path write_demo_project(const std::filesystem::path& dir);

}  // namespace scrolly::samples

#endif  // SCROLLY_SAMPLES_HPP_
