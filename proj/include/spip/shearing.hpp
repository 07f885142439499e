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

#ifndef SPIP_SHEARING_HPP_
#define SPIP_SHEARING_HPP_

#include "spip/planar.hpp"
#include "spip/spherical_polygon.hpp"
#include "spip/vec.hpp"

namespace spip::shearing {

enum class Axis { kX, kY, kZ };

// Shear transform aligned with the query direction's largest coordinate.
// Applying it maps the line {t q} onto the chosen coordinate axis, so
// dropping that coordinate afterwards projects 3-space along q. The two
// retained coordinates are ordered so the projection keeps the orientation
// a viewer looking down q would see, which keeps planar winding numbers
// signed consistently for either sign of the dominant coordinate.
struct ShearPlan {
  Axis axis = Axis::kZ;
  bool positive = true;  // sign of the dominant coordinate of q
  double r1 = 0.0;       // remaining coordinates of q divided by the
  double r2 = 0.0;       // dominant one, in x, y, z order

  Vec3 apply(const Vec3& v) const;
  PlanarPoint drop(const Vec3& sheared) const;
  PlanarPoint project(const Vec3& v) const { return drop(apply(v)); }
};

// Picks the dominant coordinate of q (ties broken toward x, then y) and
// builds the shear ratios. For a unit q the dominant magnitude is at least
// 1/sqrt(3), so both ratios are bounded by sqrt(2).
ShearPlan plan_shear(const UnitVector3& q);

// Shears the polygon and drops the dominant coordinate.
PlanarPolygon project(const SphericalPolygon& g, const ShearPlan& plan);

// Classifies the query point against the polygon: shear q onto a coordinate
// axis, drop that coordinate, and classify the origin against the resulting
// planar polygon. A planar boundary hit on edge (vi, vj) is attributed to
// the query point or its antipode by the sign of q . (T(vi) + T(vj)) with T
// the shear; magnitudes <= tol throw DegeneracyError, since the boundary
// then comes within tolerance of crossing both q and -q.
SphericalClassification classify(const SphericalPolygon& g,
                                 const UnitVector3& q,
                                 double tol = kDefaultTolerance);

// Same, with the plan precomputed so one query can be matched against many
// polygons.
SphericalClassification classify(const SphericalPolygon& g,
                                 const ShearPlan& plan, const UnitVector3& q,
                                 double tol = kDefaultTolerance);

}  // namespace spip::shearing

#endif  // SPIP_SHEARING_HPP_
