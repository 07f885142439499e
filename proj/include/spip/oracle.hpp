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

#ifndef SPIP_ORACLE_HPP_
#define SPIP_ORACLE_HPP_

#include "spip/planar.hpp"
#include "spip/spherical_polygon.hpp"
#include "spip/vec.hpp"

// Brute-force reference classifier. It reuses the query-to-north rotation
// but shares no projection or winding code with the fast paths: the winding
// number comes from summed signed turn angles instead of crossing counts,
// and the flattening keeps azimuths while mapping colatitude to the radius
// 2 (1 + cos theta) instead of dropping a coordinate. Costs
// O(vertices * segments) per query; meant for cross-checking, not serving.
namespace spip::oracle {

// Half-angle of the caps around the poles excluded from the flattening's
// domain.
inline constexpr double kPoleTol = 1e-9;

// Azimuth-preserving flattening of the sphere minus the poles: planar angle
// equals the azimuth of p, planar radius is 2 (1 + z), which decreases
// strictly in colatitude and never reaches 0 or 4 on the domain, so closed
// curves avoiding both poles keep their winding about the origin. Evaluated
// as 2 (1 + z) / rho * [x, y] for z >= 0 and 2 rho / (1 - z) * [x, y] below,
// which avoids cancellation at both ends. Throws std::domain_error within
// pole_tol of either pole.
PlanarPoint azimuthal_project(const UnitVector3& p,
                              double pole_tol = kPoleTol);

// Winding number of the polygon around the origin as the sum of signed
// vertex-to-vertex turn angles divided by 2 pi. Throws std::invalid_argument
// when a vertex sits at the origin or an edge passes through it, where the
// turn is undefined; throws std::runtime_error if the sum lands more than
// 1e-6 turns away from an integer, which a closed polygon cannot do short of
// a defect.
int angle_sum_wn(const PlanarPolygon& g);

struct SubdivisionConfig {
  int segments_per_arc = 64;
};

// Reference classification. First scans the edges in index order for an arc
// passing within tol (radians) of the query point or its antipode and
// resolves such a hit with chord_midpoint_side; otherwise rotates the query
// to the north pole, subdivides every edge, flattens the samples, and takes
// the angle-sum winding number, interior iff it is positive. Throws
// DegeneracyError when a sample lands inside the flattening's pole caps,
// since the verdict cannot be certified there.
SphericalClassification classify_by_subdivision(
    const SphericalPolygon& g, const UnitVector3& q,
    const SubdivisionConfig& cfg = {}, double tol = kDefaultTolerance);

}  // namespace spip::oracle

#endif  // SPIP_ORACLE_HPP_
