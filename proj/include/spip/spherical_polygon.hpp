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

#ifndef SPIP_SPHERICAL_POLYGON_HPP_
#define SPIP_SPHERICAL_POLYGON_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spip/vec.hpp"

namespace spip {

// Thrown when a computation certifies that its geometric precondition is
// violated (typically: the polygon boundary passes through both the query
// point's neighborhood and its antipode's), as opposed to a malformed
// argument.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed spherical polygon. Vertices are joined cyclically by minor great
// circle arcs; edge i (1-based) joins vertex i to vertex i+1, and edge n
// closes back to vertex 1. Edges may cross each other, so the boundary need
// not be simple.
class SphericalPolygon {
 public:
  // Requires at least 3 vertices, and no two cyclically consecutive vertices
  // coincident or antipodal within eps (either case leaves an edge with no
  // unique minor arc). Throws std::invalid_argument.
  explicit SphericalPolygon(std::vector<UnitVector3> vertices,
                            double eps = kNormEps);

  int size() const { return static_cast<int>(vertices_.size()); }
  const UnitVector3& vertex(int i) const { return vertices_[i]; }  // 0-based
  const std::vector<UnitVector3>& vertices() const { return vertices_; }

 private:
  std::vector<UnitVector3> vertices_;
};

// Result of classifying a query point against a polygon.
struct SphericalClassification {
  enum class Kind { kBoundary, kInterior, kExterior };

  Kind kind = Kind::kExterior;
  // 1-based index of the boundary edge involved; 0 when no edge is.
  int edge_index = 0;
  // Winding number of the boundary around the query point. Valid only when
  // wn_defined; it is also 0 (unused) for boundary verdicts.
  int winding_number = 0;
  // False only for an exterior verdict reached because the query's antipode
  // lies on the boundary, where no winding number exists.
  bool wn_defined = true;

  static SphericalClassification boundary(int edge_index) {
    return {Kind::kBoundary, edge_index, 0, true};
  }
  static SphericalClassification interior(int wn) {
    return {Kind::kInterior, 0, wn, true};
  }
  static SphericalClassification exterior(int wn) {
    return {Kind::kExterior, 0, wn, true};
  }
  static SphericalClassification antipode_on_boundary(int edge_index) {
    return {Kind::kExterior, edge_index, 0, false};
  }

  bool operator==(const SphericalClassification& o) const;
};

std::string to_string(const SphericalClassification& c);

// Which side of the boundary edge's chord the query point is on, when the
// boundary passes through the query point or its antipode.
enum class ChordSide { kQuerySide, kAntipodeSide };

// Decides whether an on-boundary hit of edge (vi, vj) belongs to the query
// point q or to its antipode: the sign of q . (vi + vj). Throws
// DegeneracyError when |q . (vi + vj)| <= tol, where neither side can be
// certified.
ChordSide chord_midpoint_side(const UnitVector3& vi, const UnitVector3& vj,
                              const UnitVector3& q, double tol = 0.0);

// Angular distance (radians) from p to the minor arc joining a and b.
double point_to_arc_angle(const UnitVector3& p, const UnitVector3& a,
                          const UnitVector3& b);

// Whether the minor arcs (a1, a2) and (b1, b2) share a point, within tol on
// the underlying dot product comparisons. Throws std::invalid_argument when
// either endpoint pair is coincident or antipodal (within kNormEps), since
// such a pair spans no unique minor arc.
bool arcs_intersect(const UnitVector3& a1, const UnitVector3& a2,
                    const UnitVector3& b1, const UnitVector3& b2,
                    double tol = kNormEps);

// Whether the polygon boundary excludes the antipode of every one of its
// points: no edge arc may meet the point-wise reflection of any edge arc.
// Returns the offending (1-based) edge index pairs, empty iff the property
// holds.
std::vector<std::pair<int, int>> antipodal_edge_pairs(
    const SphericalPolygon& g, double tol = kNormEps);

// Searches for an open hemisphere containing every vertex, by a perceptron
// style feasibility iteration. Returns a unit witness w with w . v > 0 for
// all vertices, or nullopt if none is found within the iteration budget.
// Vertex containment implies the whole boundary is contained, since minor
// arcs stay inside an open hemisphere that holds their endpoints.
std::optional<UnitVector3> hemisphere_witness(const SphericalPolygon& g);

enum class ValidationLevel { kBasic, kFull };

// Outcome of validating raw polygon vertices. The basic level covers what
// polygon construction requires; the full level adds the boundary
// antipode-exclusion scan and the hemisphere search. Fields for checks that
// did not run stay nullopt.
struct ValidationReport {
  bool is_unit = false;
  bool edges_ok = false;
  std::optional<bool> boundary_antipode_excluding;
  std::optional<bool> hemisphere_contained;
  std::optional<UnitVector3> witness;
  std::vector<std::pair<int, int>> failing_edge_pairs;
  std::vector<std::string> reasons;

  bool pass() const {
    return is_unit && edges_ok && boundary_antipode_excluding.value_or(true);
  }
};

ValidationReport validate(const std::vector<Vec3>& vertices,
                          ValidationLevel level = ValidationLevel::kFull,
                          double tol = kNormEps);

}  // namespace spip

#endif  // SPIP_SPHERICAL_POLYGON_HPP_
