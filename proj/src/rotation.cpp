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

#include "spip/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace spip::rotation {

RotationMatrix3 RotationMatrix3::about_axis(const UnitVector3& axis,
                                            double angle) {
  const Vec3& k = axis.vec();
  const Mat3 skew{{0, -k.z, k.y, k.z, 0, -k.x, -k.y, k.x, 0}};
  const Mat3 m = Mat3::identity() + skew * std::sin(angle) +
                 (skew * skew) * (1.0 - std::cos(angle));
  return RotationMatrix3(m);
}

RotationMatrix3 rotation_to_north(const SphericalAngles& q) {
  if (!std::isfinite(q.theta) || !std::isfinite(q.phi)) {
    throw std::invalid_argument("rotation_to_north: angles must be finite");
  }
  if (q.theta < 0.0 || q.theta > std::numbers::pi) {
    throw std::invalid_argument("rotation_to_north: theta " +
                                std::to_string(q.theta) +
                                " is outside [0, pi]");
  }
  const Vec3 axis{std::sin(q.phi), -std::cos(q.phi), 0.0};
  return RotationMatrix3::about_axis(UnitVector3(axis), q.theta);
}

PlanarPolygon project(const SphericalPolygon& g, const RotationMatrix3& r) {
  std::vector<PlanarPoint> pts;
  pts.reserve(g.size());
  for (const UnitVector3& v : g.vertices()) {
    const Vec3 w = r.apply(v.vec());
    pts.push_back({w.x, w.y});
  }
  return PlanarPolygon(std::move(pts));
}

SphericalClassification classify(const SphericalPolygon& g,
                                 const RotationMatrix3& r, double tol) {
  const int n = g.size();
  std::vector<Vec3> rotated;
  rotated.reserve(n);
  for (const UnitVector3& v : g.vertices()) rotated.push_back(r.apply(v.vec()));

  std::vector<PlanarPoint> pts;
  pts.reserve(n);
  for (const Vec3& w : rotated) pts.push_back({w.x, w.y});

  const PlanarState st = classify_origin(PlanarPolygon(std::move(pts)), tol);
  switch (st.kind) {
    case PlanarState::Kind::kInteriorOrigin:
      return SphericalClassification::interior(st.winding_number);
    case PlanarState::Kind::kExteriorOrigin:
      return SphericalClassification::exterior(st.winding_number);
    case PlanarState::Kind::kOnBoundary:
      break;
  }

  const int e = st.edge_index;
  const double z_mean =
      0.5 * (rotated[e - 1].z + rotated[e % n].z);
  if (std::abs(z_mean) <= tol) {
    throw DegeneracyError(
        "rotation classify: edge " + std::to_string(e) +
        " passes through the query axis with mean height " +
        std::to_string(z_mean) +
        ", so the boundary comes within tolerance of an antipodal pair");
  }
  if (z_mean > 0.0) return SphericalClassification::boundary(e);
  return SphericalClassification::antipode_on_boundary(e);
}

SphericalClassification classify(const SphericalPolygon& g,
                                 const SphericalAngles& q, double tol) {
  return classify(g, rotation_to_north(q), tol);
}

SphericalClassification classify(const SphericalPolygon& g,
                                 const UnitVector3& q, double tol) {
  return classify(g, rotation_to_north(to_angles(q)), tol);
}

}  // namespace spip::rotation
