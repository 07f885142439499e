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

#include "spip/vec.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace spip {

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

UnitVector3::UnitVector3(const Vec3& v, double eps) : v_(v) {
  const double n = v.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > eps) {
    throw std::invalid_argument("UnitVector3: norm " + std::to_string(n) +
                                " is not 1 within " + std::to_string(eps));
  }
}

UnitVector3 UnitVector3::normalized(const Vec3& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n < 1e-150) {
    throw std::invalid_argument(
        "UnitVector3::normalized: vector has no usable direction");
  }
  return UnitVector3(Unchecked{}, v / n);
}

UnitVector3 antipode(const UnitVector3& p) {
  return UnitVector3(UnitVector3::Unchecked{}, -p.vec());
}

UnitVector3 from_angles(const SphericalAngles& a) {
  if (!std::isfinite(a.theta) || !std::isfinite(a.phi)) {
    throw std::invalid_argument("from_angles: angles must be finite");
  }
  if (a.theta < 0.0 || a.theta > std::numbers::pi) {
    throw std::invalid_argument("from_angles: theta " +
                                std::to_string(a.theta) +
                                " is outside [0, pi]");
  }
  const double st = std::sin(a.theta);
  return UnitVector3(
      Vec3{st * std::cos(a.phi), st * std::sin(a.phi), std::cos(a.theta)});
}

SphericalAngles to_angles(const UnitVector3& p) {
  const double rho = std::hypot(p.x(), p.y());
  return {std::atan2(rho, p.z()), rho == 0.0 ? 0.0 : std::atan2(p.y(), p.x())};
}

UnitVector3 slerp(const UnitVector3& a, const UnitVector3& b, double t) {
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  const double omega = angle_between(a.vec(), b.vec());
  if (omega > std::numbers::pi - kNormEps) {
    throw std::invalid_argument("slerp: endpoints are antipodal");
  }
  if (omega < 1e-9) {
    return UnitVector3::normalized(a.vec() * (1.0 - t) + b.vec() * t);
  }
  const double s = std::sin(omega);
  const Vec3 v = a.vec() * (std::sin((1.0 - t) * omega) / s) +
                 b.vec() * (std::sin(t * omega) / s);
  return UnitVector3::normalized(v);
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
          m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Mat3 Mat3::operator*(double s) const {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = m[i] * s;
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double Mat3::det() const {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace spip
