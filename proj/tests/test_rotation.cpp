// Unit tests for the rotation reduction: the query-to-north rotation, its
// projection, boundary attribution, and invariance properties.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "spip/oracle.hpp"
#include "spip/rotation.hpp"
#include "spip/shearing.hpp"
#include "support.hpp"

using namespace spip;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (int i = 0; i < 9; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
  return m;
}

SphericalPolygon octant() {
  return SphericalPolygon({from_angles({kPi / 2, 0.0}), from_angles({kPi, 0.0}),
                           from_angles({kPi / 2, kPi / 2})});
}

SphericalPolygon base_triangle() {
  return SphericalPolygon({from_angles({kPi / 6, 0.0}),
                           from_angles({kPi / 4, kPi / 2}),
                           from_angles({kPi / 6, kPi})});
}

SphericalPolygon star_decagon() {
  const double deg = kPi / 180.0;
  return SphericalPolygon({from_angles({45 * deg, std::acos(0.125)}),
                           from_angles({60 * deg, 30 * deg}),
                           from_angles({90 * deg, 0 * deg}),
                           from_angles({120 * deg, 30 * deg}),
                           from_angles({90 * deg, 60 * deg}),
                           from_angles({45 * deg, std::acos(0.125)}),
                           from_angles({90 * deg, 30 * deg}),
                           from_angles({120 * deg, 60 * deg}),
                           from_angles({90 * deg, 90 * deg}),
                           from_angles({60 * deg, 60 * deg})});
}

// Triangle whose first edge passes exactly over the north pole, with both
// endpoints at height sin(delta).
SphericalPolygon over_pole_triangle(double delta) {
  return SphericalPolygon({from_angles({kPi / 2 - delta, 0.0}),
                           from_angles({kPi / 2 - delta, kPi}),
                           from_angles({2.5, 0.3})});
}

SphericalPolygon rotate_polygon(const SphericalPolygon& g,
                                const rotation::RotationMatrix3& s) {
  std::vector<UnitVector3> verts;
  for (const UnitVector3& v : g.vertices()) {
    verts.push_back(UnitVector3::normalized(s.apply(v.vec())));
  }
  return SphericalPolygon(std::move(verts));
}

}  // namespace

TEST_CASE("the north pole rotates by the identity, exactly") {
  const rotation::RotationMatrix3 r = rotation::rotation_to_north({0.0, 0.7});
  CHECK(r.matrix().m == Mat3::identity().m);
}

TEST_CASE("rotation_to_north sends the query to the pole") {
  const rotation::RotationMatrix3 r = rotation::rotation_to_north({kPi / 2, 0.0});
  CHECK((r.apply(Vec3{1, 0, 0}) - Vec3{0, 0, 1}).norm() < 1e-15);
  // A quarter turn about -y tips the old pole onto -x.
  CHECK((r.apply(Vec3{0, 0, 1}) - Vec3{-1, 0, 0}).norm() < 1e-15);

  for (const double phi : {0.0, 1.0, -2.0, 3.0}) {
    const rotation::RotationMatrix3 s = rotation::rotation_to_north({kPi, phi});
    CHECK((s.apply(Vec3{0, 0, -1}) - Vec3{0, 0, 1}).norm() < 1e-15);
    CHECK(max_abs_diff(s.matrix().transpose() * s.matrix(), Mat3::identity()) <
          1e-15);
  }

  CHECK_THROWS_AS(rotation::rotation_to_north({-0.1, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::rotation_to_north({kPi + 0.1, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation::rotation_to_north({std::nan(""), 0.0}),
                  std::invalid_argument);
}

TEST_CASE("about_axis builds proper rotations") {
  auto rng = test::make_rng(31);
  std::uniform_real_distribution<double> ad(0.0, 2 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const UnitVector3 axis = test::random_unit(rng);
    const double angle = ad(rng);
    const rotation::RotationMatrix3 r =
        rotation::RotationMatrix3::about_axis(axis, angle);
    const Mat3& m = r.matrix();
    CHECK(max_abs_diff(m.transpose() * m, Mat3::identity()) < 1e-14);
    CHECK(std::abs(m.det() - 1.0) < 1e-14);
    CHECK((r.apply(axis.vec()) - axis.vec()).norm() < 1e-15);
    const double trace = m(0, 0) + m(1, 1) + m(2, 2);
    CHECK(std::abs(trace - (1.0 + 2.0 * std::cos(angle))) < 1e-12);
  }
}

TEST_CASE("every query lands on the pole within roundoff") {
  auto rng = test::make_rng(32);
  std::uniform_real_distribution<double> td(0.0, kPi), pd(-kPi, kPi);
  for (int i = 0; i < 10000; ++i) {
    const SphericalAngles a{td(rng), pd(rng)};
    const rotation::RotationMatrix3 r = rotation::rotation_to_north(a);
    CHECK((r.apply(from_angles(a).vec()) - Vec3{0, 0, 1}).norm() < 1e-13);
  }
}

TEST_CASE("projection from the pole is a plain coordinate drop") {
  const SphericalPolygon star = star_decagon();
  const rotation::RotationMatrix3 r = rotation::rotation_to_north({0.0, 0.0});
  const PlanarPolygon p = rotation::project(star, r);
  for (int i = 0; i < star.size(); ++i) {
    CHECK(p.vertex(i).x == star.vertex(i).x());
    CHECK(p.vertex(i).y == star.vertex(i).y());
  }
}

TEST_CASE("fixture classifications") {
  const SphericalAngles north{0.0, 0.0};
  CHECK(rotation::classify(octant(), north) ==
        SphericalClassification::antipode_on_boundary(1));
  CHECK(rotation::classify(base_triangle(), north) ==
        SphericalClassification::boundary(3));
  const double deg = kPi / 180.0;
  CHECK(rotation::classify(star_decagon(), SphericalAngles{90 * deg, 45 * deg}) ==
        SphericalClassification::interior(2));
}

TEST_CASE("the Cartesian overload matches the angle form") {
  auto rng = test::make_rng(33);
  for (int i = 0; i < 100; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    const UnitVector3 q = test::random_query(rng, cap.polygon, 1e-6);
    CHECK(rotation::classify(cap.polygon, q) ==
          rotation::classify(cap.polygon, to_angles(q)));
  }
}

TEST_CASE("cap centers are interior once, their antipodes exterior") {
  auto rng = test::make_rng(34);
  for (int i = 0; i < 200; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    CHECK(rotation::classify(cap.polygon, to_angles(cap.center)) ==
          SphericalClassification::interior(1));
    // Seen from the antipode the same boundary runs backwards.
    CHECK(rotation::classify(cap.polygon, to_angles(antipode(cap.center))) ==
          SphericalClassification::exterior(-1));
  }
}

TEST_CASE("a clockwise boundary leaves the enclosed point exterior") {
  auto rng = test::make_rng(35);
  for (int i = 0; i < 100; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    std::vector<UnitVector3> rev(cap.polygon.vertices().rbegin(),
                                 cap.polygon.vertices().rend());
    const SphericalPolygon flipped(std::move(rev));
    CHECK(rotation::classify(flipped, to_angles(cap.center)) ==
          SphericalClassification::exterior(-1));
  }
}

TEST_CASE("boundary verdicts flip to the antipode flag across the sphere") {
  auto rng = test::make_rng(36);
  for (int i = 0; i < 200; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    std::uniform_int_distribution<int> ed(1, cap.polygon.size());
    const int e = ed(rng);
    const UnitVector3 q = test::edge_midpoint(cap.polygon, e);
    const SphericalClassification on = rotation::classify(cap.polygon, to_angles(q));
    REQUIRE(on.kind == SphericalClassification::Kind::kBoundary);
    const SphericalClassification off =
        rotation::classify(cap.polygon, to_angles(antipode(q)));
    CHECK(off == SphericalClassification::antipode_on_boundary(on.edge_index));
  }
}

TEST_CASE("classification is invariant under global rotations") {
  auto rng = test::make_rng(37);
  std::uniform_real_distribution<double> ad(0.0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    const UnitVector3 q = test::random_query(rng, cap.polygon, 1e-6);
    const rotation::RotationMatrix3 s =
        rotation::RotationMatrix3::about_axis(test::random_unit(rng), ad(rng));
    const SphericalPolygon moved = rotate_polygon(cap.polygon, s);
    const UnitVector3 mq = UnitVector3::normalized(s.apply(q.vec()));
    CHECK(rotation::classify(moved, to_angles(mq)) ==
          rotation::classify(cap.polygon, to_angles(q)));
  }
}

TEST_CASE("an edge hugging the query axis raises a degeneracy") {
  const SphericalPolygon g = over_pole_triangle(1e-4);
  const SphericalAngles north{0.0, 0.0};
  // Mean edge height sin(delta) ~ 1e-4 is below a 1e-3 tolerance.
  CHECK_THROWS_AS(rotation::classify(g, north, 1e-3), DegeneracyError);
  try {
    rotation::classify(g, north, 1e-3);
  } catch (const DegeneracyError& e) {
    CHECK(std::string(e.what()).find("edge 1") != std::string::npos);
  }
  // With a tolerance below the height, the pole genuinely lies on edge 1.
  CHECK(rotation::classify(g, north, 1e-12) ==
        SphericalClassification::boundary(1));
}

TEST_CASE("rotation and shearing agree on random instances") {
  auto rng = test::make_rng(38);
  for (int i = 0; i < 100; ++i) {
    const test::CapPolygon cap = test::random_cap_polygon(rng);
    for (int k = 0; k < 3; ++k) {
      const UnitVector3 q = test::random_query(rng, cap.polygon, 1e-9);
      const SphericalClassification a =
          rotation::classify(cap.polygon, to_angles(q));
      const SphericalClassification b = shearing::classify(cap.polygon, q);
      CHECK(a == b);
    }
  }
}
