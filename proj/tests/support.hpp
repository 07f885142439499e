// Shared random-instance generators for the test suite. Cap polygons are
// star-shaped about their center and fit inside a cap of radius < pi/2, so
// every generated polygon is contained in an open hemisphere and its
// boundary excludes its antipodes by construction.

#ifndef SPIP_TESTS_SUPPORT_HPP_
#define SPIP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "spip/spherical_polygon.hpp"
#include "spip/planar.hpp"
#include "spip/vec.hpp"

namespace spip::test {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline UnitVector3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    if (v.norm() > 1e-3) return UnitVector3::normalized(v);
  }
}

// Orthonormal pair completing c to a right-handed basis.
inline void tangent_basis(const UnitVector3& c, Vec3* e1, Vec3* e2) {
  const Vec3& v = c.vec();
  const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
  Vec3 h{0, 0, 0};
  if (ax <= ay && ax <= az) {
    h.x = 1;
  } else if (ay <= az) {
    h.y = 1;
  } else {
    h.z = 1;
  }
  *e1 = v.cross(h);
  *e1 = *e1 / e1->norm();
  *e2 = v.cross(*e1);
}

struct CapPolygon {
  SphericalPolygon polygon;
  UnitVector3 center;
  double radius;
};

// Polygon with vertices in strictly increasing azimuth about a random
// center, at colatitudes (from the center) sampled uniformly in cap area.
// Azimuth gaps stay below pi, so the boundary winds exactly once
// counterclockwise about the center as seen from outside the sphere.
inline CapPolygon random_cap_polygon(std::mt19937_64& rng, int min_n = 3,
                                     int max_n = 12, double min_r = 0.1,
                                     double max_r = 1.4) {
  const UnitVector3 c = random_unit(rng);
  std::uniform_int_distribution<int> nd(min_n, max_n);
  std::uniform_real_distribution<double> rd(min_r, max_r);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int n = nd(rng);
  const double r = rd(rng);
  Vec3 e1, e2;
  tangent_basis(c, &e1, &e2);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<UnitVector3> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) {
      const double step = 2.0 * std::numbers::pi / n;
      const double az = step * i + step * 0.2 * (2.0 * u01(rng) - 1.0);
      // Uniform in cap area over [~0.2 r, r]; the inner cutoff keeps vertices,
      // and with gaps below pi the arcs too, clear of the center.
      const double d =
          std::acos(1.0 - (0.05 + 0.95 * u01(rng)) * (1.0 - std::cos(r)));
      const Vec3 v = c.vec() * std::cos(d) +
                     (e1 * std::cos(az) + e2 * std::sin(az)) * std::sin(d);
      verts.push_back(UnitVector3::normalized(v));
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Vec3 a = verts[i].vec();
      const Vec3 b = verts[(i + 1) % n].vec();
      ok = (a - b).norm() > 1e-6 && (a + b).norm() > 1e-6;
    }
    if (ok) return {SphericalPolygon(std::move(verts)), c, r};
  }
  throw std::runtime_error("random_cap_polygon: could not build a polygon");
}

// Smallest angular distance from the axis through q (both q and -q) to any
// edge arc.
inline double min_axis_distance(const SphericalPolygon& g,
                                const UnitVector3& q) {
  const UnitVector3 aq = antipode(q);
  double best = std::numbers::pi;
  for (int i = 0; i < g.size(); ++i) {
    const UnitVector3& a = g.vertex(i);
    const UnitVector3& b = g.vertex((i + 1) % g.size());
    best = std::min(best, point_to_arc_angle(q, a, b));
    best = std::min(best, point_to_arc_angle(aq, a, b));
  }
  return best;
}

// Uniform query point whose axis stays at least `margin` away from every
// edge.
inline UnitVector3 random_query(std::mt19937_64& rng,
                                const SphericalPolygon& g, double margin) {
  for (;;) {
    const UnitVector3 q = random_unit(rng);
    if (min_axis_distance(g, q) >= margin) return q;
  }
}

// Distance from the origin to the closed segment [a, b].
inline double segment_origin_distance(const PlanarPoint& a,
                                      const PlanarPoint& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(a.x * dx + a.y * dy) / len2, 0.0, 1.0);
  return std::hypot(a.x + t * dx, a.y + t * dy);
}

// Polygon with coordinates in [-3, 3] whose boundary keeps at least
// `clearance` away from the origin.
inline PlanarPolygon random_planar_polygon(std::mt19937_64& rng,
                                           double clearance) {
  std::uniform_int_distribution<int> nd(3, 12);
  std::uniform_real_distribution<double> cd(-3.0, 3.0);
  for (;;) {
    const int n = nd(rng);
    std::vector<PlanarPoint> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({cd(rng), cd(rng)});
    bool clear = true;
    for (int i = 0; i < n && clear; ++i) {
      clear = segment_origin_distance(pts[i], pts[(i + 1) % n]) >= clearance;
    }
    if (clear) return PlanarPolygon(std::move(pts));
  }
}

inline UnitVector3 edge_midpoint(const SphericalPolygon& g, int edge) {
  return slerp(g.vertex(edge - 1), g.vertex(edge % g.size()), 0.5);
}

}  // namespace spip::test

#endif  // SPIP_TESTS_SUPPORT_HPP_
