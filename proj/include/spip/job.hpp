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

#ifndef SPIP_JOB_HPP_
#define SPIP_JOB_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spip/spherical_polygon.hpp"
#include "spip/vec.hpp"

namespace spip::cli {

enum class Method { kRotation, kShearing, kBoth };
enum class AngleUnit { kRadians, kDegrees };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

// Knobs a caller can set before a document's own header is read. Parse-time
// fields (angle_unit and the normalization of Cartesian query points) sit
// here because they change how records are interpreted; everything else can
// also be overridden per document by its header record.
struct JobOptions {
  Method method = Method::kBoth;
  double tolerance = kDefaultTolerance;
  bool verify = false;
  AngleUnit angle_unit = AngleUnit::kRadians;
  // Wins over the document header's angle_unit when set.
  std::optional<AngleUnit> force_angle_unit;
  bool strict_validate = false;
  bool normalize = false;
  int oracle_segments = 64;
};

// A parsed batch: everything is canonical after parsing, with angles in
// radians and polygon vertices Cartesian, so emitting and re-parsing a job
// reproduces it field for field.
struct JobSpec {
  struct Polygon {
    std::string id;
    std::vector<Vec3> vertices;

    bool operator==(const Polygon&) const = default;
  };
  struct Point {
    std::string id;
    SphericalAngles angles;

    bool operator==(const Point&) const = default;
  };

  std::vector<Polygon> polygons;
  std::vector<Point> points;
  Method method = Method::kBoth;
  double tolerance = kDefaultTolerance;
  bool verify = false;
  AngleUnit angle_unit = AngleUnit::kRadians;

  bool operator==(const JobSpec&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a line-delimited document of job/polygon/point records (field names
// frozen in docs/format.md). Throws ParseError, with the line number, for
// malformed records, unknown fields, non-finite numbers, duplicate ids, a
// zero polygon vertex, or an off-sphere Cartesian query point.
JobSpec parse_job(std::istream& in, const JobOptions& opts = {});
JobSpec parse_job_file(const std::string& path, const JobOptions& opts = {});

// Canonical document for a job: header record, then polygons, then points,
// one record per line, angles in radians.
std::string emit_job(const JobSpec& job);

struct ResultRecord {
  std::string point_id;
  std::string polygon_id;
  Method method = Method::kRotation;
  // Empty when a degeneracy stopped the classification; the message then
  // says why.
  std::optional<SphericalClassification> outcome;
  std::string degeneracy;
  // Filled when the run verified against the reference classifier.
  bool verified = false;
  std::optional<SphericalClassification> oracle_outcome;
  std::string oracle_degeneracy;
  bool agrees = true;
};

struct ValidationRecord {
  std::string polygon_id;
  ValidationReport report;
};

struct RunReport {
  std::vector<ValidationRecord> validations;
  std::vector<ResultRecord> results;
  // 0 all pass; 1 a verification or cross-method disagreement; 2 no polygon
  // was usable; 3 a validation failure under strict mode or a degeneracy
  // stop. Larger-numbered causes take precedence except that 2 beats 3.
  int exit_code = 0;
};

// Classifies every (point, polygon) pair with the requested methods, points
// outermost, rotation before shearing for method=both. Each query's rotation
// and shear plan are computed once and reused across polygons. Polygons
// failing validation get a ValidationRecord and are skipped; that fails the
// run only under strict mode, or when nothing survives.
RunReport run(const JobSpec& job, const JobOptions& opts = {});

// One record per line; validations first, then results.
std::string emit_results(const RunReport& rep);
std::string emit_validations(const std::vector<ValidationRecord>& records);

struct FixtureOutcome {
  std::string table;
  bool all_match = false;
};

// Runs the three built-in demonstration cases (an octant whose boundary
// carries the query's antipode, an isosceles triangle whose base carries the
// query, and a ten-vertex star polygon winding twice around the query) with
// both methods, and tabulates expected against actual outcomes.
FixtureOutcome run_fixtures();

}  // namespace spip::cli

#endif  // SPIP_JOB_HPP_
