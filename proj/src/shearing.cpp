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

#include "spip/shearing.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace spip::shearing {

Vec3 ShearPlan::apply(const Vec3& v) const {
  switch (axis) {
    case Axis::kX:
      return {v.x, v.y - r1 * v.x, v.z - r2 * v.x};
    case Axis::kY:
      return {v.x - r1 * v.y, v.y, v.z - r2 * v.y};
    case Axis::kZ:
      return {v.x - r1 * v.z, v.y - r2 * v.z, v.z};
  }
  return v;
}

PlanarPoint ShearPlan::drop(const Vec3& sheared) const {
  switch (axis) {
    case Axis::kX:
      return positive ? PlanarPoint{sheared.y, sheared.z}
                      : PlanarPoint{sheared.z, sheared.y};
    case Axis::kY:
      return positive ? PlanarPoint{sheared.z, sheared.x}
                      : PlanarPoint{sheared.x, sheared.z};
    case Axis::kZ:
      return positive ? PlanarPoint{sheared.x, sheared.y}
                      : PlanarPoint{sheared.y, sheared.x};
  }
  return {};
}

ShearPlan plan_shear(const UnitVector3& q) {
  const double a = q.x(), b = q.y(), c = q.z();
  ShearPlan plan;
  if (std::abs(a) >= std::abs(b) && std::abs(a) >= std::abs(c)) {
    plan.axis = Axis::kX;
    plan.positive = a > 0.0;
    plan.r1 = b / a;
    plan.r2 = c / a;
  } else if (std::abs(b) >= std::abs(c)) {
    plan.axis = Axis::kY;
    plan.positive = b > 0.0;
    plan.r1 = a / b;
    plan.r2 = c / b;
  } else {
    plan.axis = Axis::kZ;
    plan.positive = c > 0.0;
    plan.r1 = a / c;
    plan.r2 = b / c;
  }
  return plan;
}

PlanarPolygon project(const SphericalPolygon& g, const ShearPlan& plan) {
  std::vector<PlanarPoint> pts;
  pts.reserve(g.size());
  for (const UnitVector3& v : g.vertices()) pts.push_back(plan.project(v.vec()));
  return PlanarPolygon(std::move(pts));
}

SphericalClassification classify(const SphericalPolygon& g,
                                 const ShearPlan& plan, const UnitVector3& q,
                                 double tol) {
  const int n = g.size();
  std::vector<Vec3> sheared;
  sheared.reserve(n);
  for (const UnitVector3& v : g.vertices()) sheared.push_back(plan.apply(v.vec()));

  std::vector<PlanarPoint> pts;
  pts.reserve(n);
  for (const Vec3& w : sheared) pts.push_back(plan.drop(w));

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
  const double s = q.vec().dot(sheared[e - 1] + sheared[e % n]);
  if (std::abs(s) <= tol) {
    throw DegeneracyError(
        "shearing classify: edge " + std::to_string(e) +
        " passes through the query axis with chord projection " +
        std::to_string(s) +
        ", so the boundary comes within tolerance of an antipodal pair");
  }
  if (s > 0.0) return SphericalClassification::boundary(e);
  return SphericalClassification::antipode_on_boundary(e);
}

SphericalClassification classify(const SphericalPolygon& g,
                                 const UnitVector3& q, double tol) {
  return classify(g, plan_shear(q), q, tol);
}

}  // namespace spip::shearing
