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

#include "spip/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spip/rotation.hpp"

namespace spip::oracle {

PlanarPoint azimuthal_project(const UnitVector3& p, double pole_tol) {
  const double rho = std::hypot(p.x(), p.y());
  if (std::atan2(rho, std::abs(p.z())) < pole_tol) {
    throw std::domain_error(
        "azimuthal_project: point is within the pole cap, the image azimuth "
        "is unusable");
  }
  const double f =
      p.z() >= 0.0 ? 2.0 * (1.0 + p.z()) / rho : 2.0 * rho / (1.0 - p.z());
  return {f * p.x(), f * p.y()};
}

int angle_sum_wn(const PlanarPolygon& g) {
  const int n = g.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const PlanarPoint& a = g.vertex(i);
    const PlanarPoint& b = g.vertex((i + 1) % n);
    if ((a.x == 0.0 && a.y == 0.0) || (b.x == 0.0 && b.y == 0.0)) {
      throw std::invalid_argument(
          "angle_sum_wn: a vertex sits at the origin, its turn angle is "
          "undefined");
    }
    const double cross = a.x * b.y - a.y * b.x;
    const double dot = a.x * b.x + a.y * b.y;
    if (cross == 0.0 && dot < 0.0) {
      throw std::invalid_argument("angle_sum_wn: edge " + std::to_string(i + 1) +
                                  " passes through the origin, its turn angle "
                                  "is undefined");
    }
    total += std::atan2(cross, dot);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const long k = std::lround(turns);
  if (std::abs(turns - static_cast<double>(k)) > 1e-6) {
    throw std::runtime_error(
        "angle_sum_wn: turn-angle sum " + std::to_string(turns) +
        " is not an integer number of turns; the polygon is not closed "
        "consistently");
  }
  return static_cast<int>(k);
}

SphericalClassification classify_by_subdivision(const SphericalPolygon& g,
                                                const UnitVector3& q,
                                                const SubdivisionConfig& cfg,
                                                double tol) {
  if (cfg.segments_per_arc < 1) {
    throw std::invalid_argument(
        "classify_by_subdivision: segments_per_arc must be at least 1");
  }
  const int n = g.size();
  const UnitVector3 anti_q = antipode(q);
  for (int i = 0; i < n; ++i) {
    const UnitVector3& a = g.vertex(i);
    const UnitVector3& b = g.vertex((i + 1) % n);
    if (point_to_arc_angle(q, a, b) <= tol ||
        point_to_arc_angle(anti_q, a, b) <= tol) {
      if (chord_midpoint_side(a, b, q) == ChordSide::kQuerySide) {
        return SphericalClassification::boundary(i + 1);
      }
      return SphericalClassification::antipode_on_boundary(i + 1);
    }
  }

  const rotation::RotationMatrix3 r = rotation::rotation_to_north(to_angles(q));
  std::vector<PlanarPoint> samples;
  samples.reserve(static_cast<std::size_t>(n) * cfg.segments_per_arc);
  for (int i = 0; i < n; ++i) {
    const UnitVector3& a = g.vertex(i);
    const UnitVector3& b = g.vertex((i + 1) % n);
    for (int k = 0; k < cfg.segments_per_arc; ++k) {
      const double t = static_cast<double>(k) / cfg.segments_per_arc;
      const UnitVector3 s = UnitVector3::normalized(r.apply(slerp(a, b, t)));
      try {
        samples.push_back(azimuthal_project(s));
      } catch (const std::domain_error&) {
        throw DegeneracyError(
            "classify_by_subdivision: edge " + std::to_string(i + 1) +
            " passes inside the pole cap around the query axis but outside "
            "the boundary tolerance; the verdict cannot be certified");
      }
    }
  }
  const int wn = angle_sum_wn(PlanarPolygon(std::move(samples)));
  if (wn > 0) return SphericalClassification::interior(wn);
  return SphericalClassification::exterior(wn);
}

}  // namespace spip::oracle
