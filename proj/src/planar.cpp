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

#include "spip/planar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spip {

PlanarPolygon::PlanarPolygon(std::vector<PlanarPoint> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("PlanarPolygon: need at least 3 vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y)) {
      throw std::invalid_argument("PlanarPolygon: vertex " +
                                  std::to_string(i + 1) +
                                  " has a non-finite coordinate");
    }
  }
}

PlanarState classify_origin(const PlanarPolygon& g, double tol) {
  const int n = g.size();
  int wn = 0;
  for (int i = 0; i < n; ++i) {
    const PlanarPoint& a = g.vertex(i);
    const PlanarPoint& b = g.vertex((i + 1) % n);
    const double m = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x),
                               std::abs(b.y)});
    const double tau = tol * m * m;
    if (std::abs(a.x * b.y - a.y * b.x) <= tau && a.x * b.x <= tau &&
        a.y * b.y <= tau) {
      return PlanarState::on_boundary(i + 1);
    }
    // Signed area of the triangle (a, b, origin); positive when the origin
    // is left of the directed edge.
    const double is_left = a.x * (b.y - a.y) - (b.x - a.x) * a.y;
    if (a.y <= 0.0 && b.y > 0.0) {
      if (is_left > 0.0) ++wn;
    } else if (a.y > 0.0 && b.y <= 0.0) {
      if (is_left < 0.0) --wn;
    }
  }
  if (wn > 0) return PlanarState::interior(wn);
  return PlanarState::exterior(wn);
}

}  // namespace spip
