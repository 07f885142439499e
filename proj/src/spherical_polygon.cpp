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

#include "spip/spherical_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spip {
namespace {

// Whether c, assumed on the great circle through p and q, lies on the minor
// arc between them. With c = p cos(t) + w sin(t) along the circle, both dot
// products stay >= p . q exactly for t in [0, arc length].
bool on_minor_arc(const Vec3& c, const Vec3& p, const Vec3& q, double tol) {
  const double pq = p.dot(q);
  return c.dot(p) >= pq - tol && c.dot(q) >= pq - tol;
}

}  // namespace

SphericalPolygon::SphericalPolygon(std::vector<UnitVector3> vertices,
                                   double eps)
    : vertices_(std::move(vertices)) {
  const int n = static_cast<int>(vertices_.size());
  if (n < 3) {
    throw std::invalid_argument("SphericalPolygon: need at least 3 vertices");
  }
  for (int i = 0; i < n; ++i) {
    const Vec3& a = vertices_[i].vec();
    const Vec3& b = vertices_[(i + 1) % n].vec();
    if ((a - b).norm() <= eps) {
      throw std::invalid_argument(
          "SphericalPolygon: vertices " + std::to_string(i + 1) + " and " +
          std::to_string((i + 1) % n + 1) + " coincide");
    }
    if ((a + b).norm() <= eps) {
      throw std::invalid_argument(
          "SphericalPolygon: vertices " + std::to_string(i + 1) + " and " +
          std::to_string((i + 1) % n + 1) +
          " are antipodal, the edge between them has no unique minor arc");
    }
  }
}

bool SphericalClassification::operator==(
    const SphericalClassification& o) const {
  if (kind != o.kind || wn_defined != o.wn_defined) return false;
  if (kind == Kind::kBoundary) return edge_index == o.edge_index;
  if (wn_defined) return winding_number == o.winding_number;
  return true;
}

std::string to_string(const SphericalClassification& c) {
  using Kind = SphericalClassification::Kind;
  switch (c.kind) {
    case Kind::kBoundary:
      return "boundary (edge " + std::to_string(c.edge_index) + ")";
    case Kind::kInterior:
      return "interior (wn=" + std::to_string(c.winding_number) + ")";
    case Kind::kExterior:
      if (!c.wn_defined) return "exterior (antipode on boundary)";
      return "exterior (wn=" + std::to_string(c.winding_number) + ")";
  }
  return "unknown";
}

ChordSide chord_midpoint_side(const UnitVector3& vi, const UnitVector3& vj,
                              const UnitVector3& q, double tol) {
  const double s = q.vec().dot(vi.vec() + vj.vec());
  if (std::abs(s) <= tol) {
    throw DegeneracyError(
        "chord_midpoint_side: edge chord midpoint is orthogonal to the query "
        "point, the hit cannot be attributed to it or its antipode");
  }
  return s > 0.0 ? ChordSide::kQuerySide : ChordSide::kAntipodeSide;
}

double point_to_arc_angle(const UnitVector3& p, const UnitVector3& a,
                          const UnitVector3& b) {
  const Vec3 n = a.vec().cross(b.vec());
  const double nn = n.norm();
  if (nn < 1e-150) {
    return std::min(angle_between(p.vec(), a.vec()),
                    angle_between(p.vec(), b.vec()));
  }
  const Vec3 nh = n / nn;
  const double h = p.vec().dot(nh);
  const Vec3 foot = p.vec() - nh * h;
  const double fn = foot.norm();
  if (fn < 1e-150) return std::numbers::pi / 2.0;
  if (on_minor_arc(foot / fn, a.vec(), b.vec(), 0.0)) {
    return std::asin(std::clamp(std::abs(h), 0.0, 1.0));
  }
  return std::min(angle_between(p.vec(), a.vec()),
                  angle_between(p.vec(), b.vec()));
}

bool arcs_intersect(const UnitVector3& a1, const UnitVector3& a2,
                    const UnitVector3& b1, const UnitVector3& b2,
                    double tol) {
  const auto degenerate = [](const UnitVector3& p, const UnitVector3& q) {
    return (p.vec() - q.vec()).norm() <= kNormEps ||
           (p.vec() + q.vec()).norm() <= kNormEps;
  };
  if (degenerate(a1, a2) || degenerate(b1, b2)) {
    throw std::invalid_argument(
        "arcs_intersect: an arc's endpoints are coincident or antipodal, so "
        "its great circle is not determined");
  }
  const Vec3 na = a1.vec().cross(a2.vec());
  const Vec3 nb = b1.vec().cross(b2.vec());
  const Vec3 d = na.cross(nb);
  const double dn = d.norm();
  if (dn > tol * na.norm() * nb.norm()) {
    const Vec3 c = d / dn;
    for (const Vec3& cand : {c, -c}) {
      if (on_minor_arc(cand, a1.vec(), a2.vec(), tol) &&
          on_minor_arc(cand, b1.vec(), b2.vec(), tol)) {
        return true;
      }
    }
    return false;
  }
  // Same great circle: the arcs intersect iff an endpoint of one lies on the
  // other.
  return on_minor_arc(b1.vec(), a1.vec(), a2.vec(), tol) ||
         on_minor_arc(b2.vec(), a1.vec(), a2.vec(), tol) ||
         on_minor_arc(a1.vec(), b1.vec(), b2.vec(), tol) ||
         on_minor_arc(a2.vec(), b1.vec(), b2.vec(), tol);
}

std::vector<std::pair<int, int>> antipodal_edge_pairs(
    const SphericalPolygon& g, double tol) {
  std::vector<std::pair<int, int>> pairs;
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    const UnitVector3 ri = antipode(g.vertex(i));
    const UnitVector3 rj = antipode(g.vertex((i + 1) % n));
    for (int k = 0; k < n; ++k) {
      if (arcs_intersect(ri, rj, g.vertex(k), g.vertex((k + 1) % n), tol)) {
        pairs.emplace_back(i + 1, k + 1);
      }
    }
  }
  return pairs;
}

std::optional<UnitVector3> hemisphere_witness(const SphericalPolygon& g) {
  constexpr double kMargin = 1e-9;
  constexpr int kMaxIters = 200000;
  Vec3 w{};
  for (const UnitVector3& v : g.vertices()) w = w + v.vec();
  for (int iter = 0; iter < kMaxIters; ++iter) {
    const double wn = w.norm();
    const UnitVector3* violator = nullptr;
    if (wn < 1e-12) {
      violator = &g.vertex(iter % g.size());
    } else {
      for (const UnitVector3& v : g.vertices()) {
        if (w.dot(v.vec()) / wn < kMargin) {
          violator = &v;
          break;
        }
      }
    }
    if (violator == nullptr) return UnitVector3::normalized(w);
    w = w + violator->vec();
  }
  return std::nullopt;
}

ValidationReport validate(const std::vector<Vec3>& vertices,
                          ValidationLevel level, double tol) {
  ValidationReport rep;
  const int n = static_cast<int>(vertices.size());

  rep.is_unit = true;
  for (int i = 0; i < n; ++i) {
    const double vn = vertices[i].norm();
    if (!std::isfinite(vn) || std::abs(vn - 1.0) > tol) {
      rep.is_unit = false;
      rep.reasons.push_back("vertex " + std::to_string(i + 1) +
                            " is not unit-norm (|v| = " + std::to_string(vn) +
                            ")");
    }
  }

  rep.edges_ok = true;
  if (n < 3) {
    rep.edges_ok = false;
    rep.reasons.push_back("polygon has " + std::to_string(n) +
                          " vertices, need at least 3");
  } else {
    for (int i = 0; i < n; ++i) {
      const Vec3& a = vertices[i];
      const Vec3& b = vertices[(i + 1) % n];
      if ((a - b).norm() <= tol) {
        rep.edges_ok = false;
        rep.reasons.push_back("vertices " + std::to_string(i + 1) + " and " +
                              std::to_string((i + 1) % n + 1) + " coincide");
      } else if ((a + b).norm() <= tol) {
        rep.edges_ok = false;
        rep.reasons.push_back("vertices " + std::to_string(i + 1) + " and " +
                              std::to_string((i + 1) % n + 1) +
                              " are antipodal");
      }
    }
  }

  if (level == ValidationLevel::kFull && rep.is_unit && rep.edges_ok) {
    std::vector<UnitVector3> unit;
    unit.reserve(vertices.size());
    for (const Vec3& v : vertices) unit.emplace_back(v, tol);
    const SphericalPolygon g(std::move(unit), tol);

    rep.failing_edge_pairs = antipodal_edge_pairs(g, tol);
    rep.boundary_antipode_excluding = rep.failing_edge_pairs.empty();
    if (!*rep.boundary_antipode_excluding) {
      for (const auto& [i, k] : rep.failing_edge_pairs) {
        rep.reasons.push_back("the reflection of edge " + std::to_string(i) +
                              " meets edge " + std::to_string(k) +
                              ", so the boundary contains an antipodal pair");
      }
    }

    rep.witness = hemisphere_witness(g);
    rep.hemisphere_contained = rep.witness.has_value();
  }

  return rep;
}

}  // namespace spip
