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

#ifndef SPIP_PLANAR_HPP_
#define SPIP_PLANAR_HPP_

#include <vector>

#include "spip/vec.hpp"

namespace spip {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const PlanarPoint&) const = default;
};

// Closed planar polygon, vertices joined cyclically by segments. Edges may
// cross. Edge i (1-based) joins vertex i to vertex i+1, edge n closes back
// to vertex 1.
class PlanarPolygon {
 public:
  // Requires at least 3 vertices with finite coordinates. Throws
  // std::invalid_argument.
  explicit PlanarPolygon(std::vector<PlanarPoint> vertices);

  int size() const { return static_cast<int>(vertices_.size()); }
  const PlanarPoint& vertex(int i) const { return vertices_[i]; }  // 0-based
  const std::vector<PlanarPoint>& vertices() const { return vertices_; }

 private:
  std::vector<PlanarPoint> vertices_;
};

// Where the origin sits relative to a planar polygon. The interior tag is
// reserved for positive winding numbers; a negatively wound boundary leaves
// the origin tagged exterior, carrying the signed count.
struct PlanarState {
  enum class Kind { kOnBoundary, kInteriorOrigin, kExteriorOrigin };

  Kind kind = Kind::kExteriorOrigin;
  // 1-based index of the edge the origin lies on; 0 otherwise.
  int edge_index = 0;
  // Winding number of the boundary around the origin; 0 for boundary hits.
  int winding_number = 0;

  static PlanarState on_boundary(int edge_index) {
    return {Kind::kOnBoundary, edge_index, 0};
  }
  static PlanarState interior(int wn) {
    return {Kind::kInteriorOrigin, 0, wn};
  }
  static PlanarState exterior(int wn) {
    return {Kind::kExteriorOrigin, 0, wn};
  }

  bool operator==(const PlanarState&) const = default;
};

// Classifies the origin against the polygon by accumulating the winding
// number over upward and downward edge crossings of the positive x axis.
// An edge carries the origin when its segment passes within tolerance: the
// triple |x_i y_j - y_i x_j| <= tau, x_i x_j <= tau, y_i y_j <= tau with
// tau = tol * m^2 and m the largest coordinate magnitude on the edge, so the
// decision is invariant under uniform scaling of the polygon. The first such
// edge in index order wins. Otherwise the origin is interior iff the
// accumulated winding number is positive.
PlanarState classify_origin(const PlanarPolygon& g,
                            double tol = kDefaultTolerance);

}  // namespace spip

#endif  // SPIP_PLANAR_HPP_
