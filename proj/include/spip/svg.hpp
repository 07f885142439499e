// Copyright 2026 The Spip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef SPIP_SVG_HPP_
#define SPIP_SVG_HPP_

#include <string>
#include <vector>

#include "spip/planar.hpp"

namespace spip::cli {

// One plotted projection: a closed planar outline with the origin marked.
struct PlotPanel {
  std::string label;
  std::vector<PlanarPoint> outline;
};

// Renders the panels in a grid, each auto-scaled to its own extent with the
// origin drawn as a cross. Debug output only.
std::string render_svg(const std::vector<PlotPanel>& panels);

}  // namespace spip::cli

#endif  // SPIP_SVG_HPP_
