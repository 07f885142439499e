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

#ifndef SPIP_VEC_HPP_
#define SPIP_VEC_HPP_

#include <array>
#include <cmath>

namespace spip {

// Tolerance for unit-norm checks and for coincident/antipodal vertex tests.
inline constexpr double kNormEps = 1e-9;

// Default tolerance for the planar boundary test and its spherical callers.
inline constexpr double kDefaultTolerance = 1e-12;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const {
    return {x + o.x, y + o.y, z + o.z};
  }
  constexpr Vec3 operator-(const Vec3& o) const {
    return {x - o.x, y - o.y, z - o.z};
  }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  constexpr double dot(const Vec3& o) const {
    return x * o.x + y * o.y + z * o.z;
  }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }

  bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Angle between two nonzero vectors, in [0, pi]. Uses atan2 of the cross and
// dot magnitudes, so it stays accurate for nearly parallel and nearly
// opposite inputs where acos of the normalized dot product loses digits.
double angle_between(const Vec3& a, const Vec3& b);

// A point on the unit sphere. Construction checks the norm; the stored
// coordinates are kept exactly as given, not re-normalized.
class UnitVector3 {
 public:
  // Throws std::invalid_argument if | |v| - 1 | > eps.
  explicit UnitVector3(const Vec3& v, double eps = kNormEps);

  // Scales v to unit length. Throws std::invalid_argument on a vector too
  // close to zero to carry a direction.
  static UnitVector3 normalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

 private:
  struct Unchecked {};
  UnitVector3(Unchecked, const Vec3& v) : v_(v) {}
  friend UnitVector3 antipode(const UnitVector3& p);

  Vec3 v_;
};

// Coordinate-wise negation. Preserves the norm exactly, so the result is
// never re-checked, and applying it twice restores the original bits.
UnitVector3 antipode(const UnitVector3& p);

// Colatitude theta in [0, pi] measured from +z, azimuth phi measured from +x
// toward +y. Radians.
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;

  bool operator==(const SphericalAngles&) const = default;
};

// [sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)].
// Throws std::invalid_argument if theta is outside [0, pi] or either angle
// is not finite.
UnitVector3 from_angles(const SphericalAngles& a);

// theta = atan2(hypot(x, y), z), phi = atan2(y, x). The poles get phi = 0.
SphericalAngles to_angles(const UnitVector3& p);

// Spherical linear interpolation along the minor arc from a to b,
// sin-weighted, with a normalized linear fallback when the arc is too short
// for the sine weights to be meaningful. Throws std::invalid_argument for
// antipodal endpoints, which have no unique arc.
UnitVector3 slerp(const UnitVector3& a, const UnitVector3& b, double t);

// Row-major 3x3 matrix. Just enough linear algebra for rotations.
struct Mat3 {
  std::array<double, 9> m{};

  static constexpr Mat3 identity() {
    return {{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  }

  constexpr double operator()(int r, int c) const { return m[3 * r + c]; }
  constexpr double& operator()(int r, int c) { return m[3 * r + c]; }

  Mat3 operator*(const Mat3& o) const;
  Vec3 operator*(const Vec3& v) const;
  Mat3 operator+(const Mat3& o) const;
  Mat3 operator*(double s) const;
  Mat3 transpose() const;
  double det() const;
};

}  // namespace spip

#endif  // SPIP_VEC_HPP_
