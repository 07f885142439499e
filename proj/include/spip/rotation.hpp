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

#ifndef SPIP_ROTATION_HPP_
#define SPIP_ROTATION_HPP_

#include "spip/planar.hpp"
#include "spip/spherical_polygon.hpp"
#include "spip/vec.hpp"

namespace spip::rotation {

// Proper rotation of 3-space. Instances are only built by the factories, so
// the matrix is orthogonal with determinant +1 up to roundoff.
class RotationMatrix3 {
 public:
  // Axis-angle rotation in Rodrigues form:
  //   R = I + sin(angle) K + (1 - cos(angle)) K^2
  // with K the cross-product matrix of the axis.
  static RotationMatrix3 about_axis(const UnitVector3& axis, double angle);

  const Mat3& matrix() const { return m_; }
  Vec3 apply(const Vec3& v) const { return m_ * v; }

 private:
  explicit RotationMatrix3(const Mat3& m) : m_(m) {}
  friend RotationMatrix3 rotation_to_north(const SphericalAngles& q);

  Mat3 m_;
};

// The rotation taking the point at (theta, phi) to the north pole: a turn by
// theta about the horizontal axis [sin(phi), -cos(phi), 0], which is
// perpendicular to the point's meridian plane. Throws std::invalid_argument
// for theta outside [0, pi] or non-finite angles.
RotationMatrix3 rotation_to_north(const SphericalAngles& q);

// Rotates the polygon and drops z.
PlanarPolygon project(const SphericalPolygon& g, const RotationMatrix3& r);

// Classifies the query point at (theta, phi) against the polygon: rotate the
// query to the north pole, drop z, and classify the origin against the
// resulting planar polygon. A planar boundary hit is attributed to the query
// point or its antipode by the mean rotated z over the edge's endpoints:
// positive means the query side, negative the antipode side, and |mean| <=
// tol throws DegeneracyError since the boundary then carries a near-antipodal
// pair through the query's axis.
SphericalClassification classify(const SphericalPolygon& g,
                                 const SphericalAngles& q,
                                 double tol = kDefaultTolerance);

// Same, with the rotation precomputed so one query can be matched against
// many polygons.
SphericalClassification classify(const SphericalPolygon& g,
                                 const RotationMatrix3& r,
                                 double tol = kDefaultTolerance);

// Convenience overload taking the query in Cartesian form.
SphericalClassification classify(const SphericalPolygon& g,
                                 const UnitVector3& q,
                                 double tol = kDefaultTolerance);

}  // namespace spip::rotation

#endif  // SPIP_ROTATION_HPP_
