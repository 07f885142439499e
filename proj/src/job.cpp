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

#include "spip/job.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "spip/oracle.hpp"
#include "spip/rotation.hpp"
#include "spip/shearing.hpp"

namespace spip::cli {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

void check_keys(const json& rec, std::initializer_list<const char*> allowed,
                const std::string& what, int line) {
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(line, "unknown field '" + it.key() + "' in " + what + " record");
    }
  }
}

double finite_number(const json& v, const std::string& what, int line) {
  if (!v.is_number()) fail(line, what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(line, what + " is not finite");
  return d;
}

std::vector<double> number_array(const json& v, std::size_t lo, std::size_t hi,
                                 const std::string& what, int line) {
  if (!v.is_array() || v.size() < lo || v.size() > hi) {
    fail(line, what + " must be an array of " + std::to_string(lo) +
                   (lo == hi ? "" : " to " + std::to_string(hi)) + " numbers");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(finite_number(e, what, line));
  return out;
}

std::string require_id(const json& rec, const std::string& what, int line) {
  if (!rec.contains("id") || !rec["id"].is_string() ||
      rec["id"].get<std::string>().empty()) {
    fail(line, what + " record needs a non-empty string 'id'");
  }
  return rec["id"].get<std::string>();
}

std::vector<Method> expand(Method m) {
  if (m == Method::kBoth) return {Method::kRotation, Method::kShearing};
  return {m};
}

// Serializes a classification (or its absence) into the shared result
// fields. edge_index is reserved for boundary verdicts; the edge hit by the
// antipode rides along separately.
void put_outcome(json& j, const std::optional<SphericalClassification>& c) {
  using Kind = SphericalClassification::Kind;
  if (!c.has_value()) {
    j["outcome"] = nullptr;
    j["winding_number"] = nullptr;
    j["edge_index"] = nullptr;
    j["antipode_on_boundary"] = false;
    return;
  }
  switch (c->kind) {
    case Kind::kBoundary:
      j["outcome"] = "boundary";
      j["winding_number"] = nullptr;
      j["edge_index"] = c->edge_index;
      j["antipode_on_boundary"] = false;
      break;
    case Kind::kInterior:
      j["outcome"] = "interior";
      j["winding_number"] = c->winding_number;
      j["edge_index"] = nullptr;
      j["antipode_on_boundary"] = false;
      break;
    case Kind::kExterior:
      j["outcome"] = "exterior";
      if (c->wn_defined) {
        j["winding_number"] = c->winding_number;
      } else {
        j["winding_number"] = nullptr;
      }
      j["edge_index"] = nullptr;
      j["antipode_on_boundary"] = !c->wn_defined;
      if (!c->wn_defined) j["antipode_edge"] = c->edge_index;
      break;
  }
}

json validation_json(const ValidationRecord& rec) {
  const ValidationReport& r = rec.report;
  json j;
  j["type"] = "validation";
  j["polygon"] = rec.polygon_id;
  j["pass"] = r.pass();
  j["is_unit"] = r.is_unit;
  j["edges_ok"] = r.edges_ok;
  if (r.boundary_antipode_excluding.has_value()) {
    j["boundary_antipode_excluding"] = *r.boundary_antipode_excluding;
  } else {
    j["boundary_antipode_excluding"] = nullptr;
  }
  if (r.hemisphere_contained.has_value()) {
    j["hemisphere_contained"] = *r.hemisphere_contained;
  } else {
    j["hemisphere_contained"] = nullptr;
  }
  if (r.witness.has_value()) {
    j["witness"] = {r.witness->x(), r.witness->y(), r.witness->z()};
  } else {
    j["witness"] = nullptr;
  }
  json pairs = json::array();
  for (const auto& [a, b] : r.failing_edge_pairs) pairs.push_back({a, b});
  j["failing_edge_pairs"] = std::move(pairs);
  j["reasons"] = r.reasons;
  return j;
}

json result_json(const ResultRecord& rec) {
  json j;
  j["type"] = "result";
  j["point"] = rec.point_id;
  j["polygon"] = rec.polygon_id;
  j["method"] = to_string(rec.method);
  put_outcome(j, rec.outcome);
  j["validation"] = rec.degeneracy.empty() ? "pass" : "fail";
  if (!rec.degeneracy.empty()) j["reasons"] = json::array({rec.degeneracy});
  if (rec.verified) {
    json v;
    put_outcome(v, rec.oracle_outcome);
    if (!rec.oracle_degeneracy.empty()) {
      v["reasons"] = json::array({rec.oracle_degeneracy});
    }
    v["agrees"] = rec.agrees;
    j["verify"] = std::move(v);
  }
  return j;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kRotation:
      return "rotation";
    case Method::kShearing:
      return "shearing";
    case Method::kBoth:
      return "both";
  }
  return "both";
}

std::optional<Method> method_from_string(const std::string& s) {
  if (s == "rotation") return Method::kRotation;
  if (s == "shearing") return Method::kShearing;
  if (s == "both") return Method::kBoth;
  return std::nullopt;
}

JobSpec parse_job(std::istream& in, const JobOptions& opts) {
  JobSpec job;
  job.method = opts.method;
  job.tolerance = opts.tolerance;
  job.verify = opts.verify;
  job.angle_unit = AngleUnit::kRadians;

  AngleUnit unit = opts.force_angle_unit.value_or(opts.angle_unit);
  bool header_seen = false;
  bool body_seen = false;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const std::exception& e) {
      fail(line, std::string("malformed record: ") + e.what());
    }
    if (!rec.is_object()) fail(line, "record must be an object");
    if (!rec.contains("type") || !rec["type"].is_string()) {
      fail(line, "record needs a string 'type'");
    }
    const std::string type = rec["type"].get<std::string>();

    if (type == "job") {
      if (header_seen) fail(line, "more than one job record");
      if (body_seen) {
        fail(line, "the job record must precede polygon and point records");
      }
      header_seen = true;
      check_keys(rec, {"type", "method", "tolerance", "verify", "angle_unit"},
                 "job", line);
      if (rec.contains("method")) {
        if (!rec["method"].is_string()) fail(line, "method must be a string");
        const auto m = method_from_string(rec["method"].get<std::string>());
        if (!m) fail(line, "method must be rotation, shearing, or both");
        job.method = *m;
      }
      if (rec.contains("tolerance")) {
        const double t = finite_number(rec["tolerance"], "tolerance", line);
        if (t <= 0.0) fail(line, "tolerance must be positive");
        job.tolerance = t;
      }
      if (rec.contains("verify")) {
        if (!rec["verify"].is_boolean()) fail(line, "verify must be a boolean");
        job.verify = rec["verify"].get<bool>();
      }
      if (rec.contains("angle_unit")) {
        if (!rec["angle_unit"].is_string()) {
          fail(line, "angle_unit must be a string");
        }
        const std::string u = rec["angle_unit"].get<std::string>();
        AngleUnit header_unit;
        if (u == "radians") {
          header_unit = AngleUnit::kRadians;
        } else if (u == "degrees") {
          header_unit = AngleUnit::kDegrees;
        } else {
          fail(line, "angle_unit must be radians or degrees");
        }
        if (!opts.force_angle_unit.has_value()) unit = header_unit;
      }
    } else if (type == "polygon") {
      body_seen = true;
      check_keys(rec, {"type", "id", "vertices"}, "polygon", line);
      const std::string id = require_id(rec, "polygon", line);
      for (const auto& p : job.polygons) {
        if (p.id == id) fail(line, "duplicate polygon id '" + id + "'");
      }
      if (!rec.contains("vertices") || !rec["vertices"].is_array() ||
          rec["vertices"].empty()) {
        fail(line, "polygon '" + id + "' needs a non-empty 'vertices' array");
      }
      JobSpec::Polygon poly;
      poly.id = id;
      std::size_t width = 0;
      const auto& arr = rec["vertices"];
      for (std::size_t vi = 0; vi < arr.size(); ++vi) {
        const std::string label =
            "polygon '" + id + "' vertex " + std::to_string(vi + 1);
        const std::vector<double> nums = number_array(arr[vi], 2, 3, label, line);
        if (width == 0) width = nums.size();
        if (nums.size() != width) {
          fail(line, label + " mixes angle pairs with Cartesian triples");
        }
        if (width == 3) {
          const Vec3 v{nums[0], nums[1], nums[2]};
          if (v.norm() < 1e-150) fail(line, label + " is the zero vector");
          poly.vertices.push_back(v);
        } else {
          const double s = unit == AngleUnit::kDegrees
                               ? std::numbers::pi / 180.0
                               : 1.0;
          try {
            poly.vertices.push_back(
                from_angles({nums[0] * s, nums[1] * s}).vec());
          } catch (const std::invalid_argument& e) {
            fail(line, label + ": " + e.what());
          }
        }
      }
      job.polygons.push_back(std::move(poly));
    } else if (type == "point") {
      body_seen = true;
      check_keys(rec, {"type", "id", "angles", "cartesian"}, "point", line);
      const std::string id = require_id(rec, "point", line);
      for (const auto& p : job.points) {
        if (p.id == id) fail(line, "duplicate point id '" + id + "'");
      }
      const bool has_angles = rec.contains("angles");
      const bool has_cartesian = rec.contains("cartesian");
      if (has_angles == has_cartesian) {
        fail(line, "point '" + id +
                       "' needs exactly one of 'angles' or 'cartesian'");
      }
      JobSpec::Point pt;
      pt.id = id;
      if (has_angles) {
        const std::vector<double> nums = number_array(
            rec["angles"], 2, 2, "point '" + id + "' angles", line);
        const double s =
            unit == AngleUnit::kDegrees ? std::numbers::pi / 180.0 : 1.0;
        pt.angles = {nums[0] * s, nums[1] * s};
        try {
          from_angles(pt.angles);
        } catch (const std::invalid_argument& e) {
          fail(line, "point '" + id + "': " + e.what());
        }
      } else {
        const std::vector<double> nums = number_array(
            rec["cartesian"], 3, 3, "point '" + id + "' cartesian", line);
        const Vec3 v{nums[0], nums[1], nums[2]};
        try {
          const UnitVector3 u =
              opts.normalize ? UnitVector3::normalized(v) : UnitVector3(v);
          pt.angles = to_angles(u);
        } catch (const std::invalid_argument& e) {
          fail(line, "point '" + id + "': " + e.what());
        }
      }
      job.points.push_back(std::move(pt));
    } else {
      fail(line, "unknown record type '" + type + "'");
    }
  }
  return job;
}

JobSpec parse_job_file(const std::string& path, const JobOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file " + path);
  return parse_job(in, opts);
}

std::string emit_job(const JobSpec& job) {
  std::string out;
  json h;
  h["type"] = "job";
  h["method"] = to_string(job.method);
  h["tolerance"] = job.tolerance;
  h["verify"] = job.verify;
  h["angle_unit"] =
      job.angle_unit == AngleUnit::kDegrees ? "degrees" : "radians";
  out += h.dump();
  out += '\n';
  for (const auto& poly : job.polygons) {
    json p;
    p["type"] = "polygon";
    p["id"] = poly.id;
    json verts = json::array();
    for (const Vec3& v : poly.vertices) verts.push_back({v.x, v.y, v.z});
    p["vertices"] = std::move(verts);
    out += p.dump();
    out += '\n';
  }
  for (const auto& pt : job.points) {
    json p;
    p["type"] = "point";
    p["id"] = pt.id;
    p["angles"] = {pt.angles.theta, pt.angles.phi};
    out += p.dump();
    out += '\n';
  }
  return out;
}

RunReport run(const JobSpec& job, const JobOptions& opts) {
  RunReport rep;
  const int np = static_cast<int>(job.polygons.size());
  std::vector<std::optional<SphericalPolygon>> polys(np);
  bool strict_fail = false;

  for (int i = 0; i < np; ++i) {
    std::vector<Vec3> verts = job.polygons[i].vertices;
    if (opts.normalize) {
      for (Vec3& v : verts) {
        const double n = v.norm();
        if (n > 1e-150) v = v / n;
      }
    }
    const ValidationLevel level = opts.strict_validate
                                      ? ValidationLevel::kFull
                                      : ValidationLevel::kBasic;
    ValidationReport vr = validate(verts, level);
    const bool usable = vr.is_unit && vr.edges_ok;
    if (!usable || (opts.strict_validate && !vr.pass())) {
      rep.validations.push_back({job.polygons[i].id, std::move(vr)});
      if (opts.strict_validate) strict_fail = true;
      continue;
    }
    std::vector<UnitVector3> unit;
    unit.reserve(verts.size());
    for (const Vec3& v : verts) unit.emplace_back(v);
    polys[i].emplace(std::move(unit));
  }

  bool any_usable = false;
  for (const auto& p : polys) any_usable = any_usable || p.has_value();

  bool degenerate = false;
  bool disagree = false;
  for (const auto& pt : job.points) {
    const UnitVector3 q = from_angles(pt.angles);
    const rotation::RotationMatrix3 r = rotation::rotation_to_north(pt.angles);
    const shearing::ShearPlan plan = shearing::plan_shear(q);
    for (int i = 0; i < np; ++i) {
      if (!polys[i].has_value()) continue;
      const SphericalPolygon& g = *polys[i];
      std::optional<SphericalClassification> by_rotation, by_shearing;
      for (const Method m : expand(job.method)) {
        ResultRecord rec;
        rec.point_id = pt.id;
        rec.polygon_id = job.polygons[i].id;
        rec.method = m;
        try {
          rec.outcome = m == Method::kRotation
                            ? rotation::classify(g, r, job.tolerance)
                            : shearing::classify(g, plan, q, job.tolerance);
        } catch (const DegeneracyError& e) {
          rec.degeneracy = e.what();
          degenerate = true;
        }
        if (job.verify && rec.outcome.has_value()) {
          rec.verified = true;
          try {
            rec.oracle_outcome = oracle::classify_by_subdivision(
                g, q, {opts.oracle_segments}, job.tolerance);
          } catch (const DegeneracyError& e) {
            rec.oracle_degeneracy = e.what();
          }
          rec.agrees = rec.oracle_outcome.has_value() &&
                       *rec.oracle_outcome == *rec.outcome;
          if (!rec.agrees) disagree = true;
        }
        (m == Method::kRotation ? by_rotation : by_shearing) = rec.outcome;
        rep.results.push_back(std::move(rec));
      }
      if (job.method == Method::kBoth && by_rotation.has_value() &&
          by_shearing.has_value() && !(*by_rotation == *by_shearing)) {
        disagree = true;
      }
    }
  }

  if (np > 0 && !any_usable) {
    rep.exit_code = 2;
  } else if (strict_fail || degenerate) {
    rep.exit_code = 3;
  } else if (disagree) {
    rep.exit_code = 1;
  } else {
    rep.exit_code = 0;
  }
  return rep;
}

std::string emit_results(const RunReport& rep) {
  std::string out;
  for (const auto& v : rep.validations) {
    out += validation_json(v).dump();
    out += '\n';
  }
  for (const auto& r : rep.results) {
    out += result_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string emit_validations(const std::vector<ValidationRecord>& records) {
  std::string out;
  for (const auto& v : records) {
    out += validation_json(v).dump();
    out += '\n';
  }
  return out;
}

FixtureOutcome run_fixtures() {
  struct Case {
    const char* name;
    const char* query_label;
    SphericalAngles q;
    std::vector<UnitVector3> verts;
    SphericalClassification expected;
  };
  const double deg = std::numbers::pi / 180.0;
  const std::vector<Case> cases = {
      {"octant",
       "(0, 0) rad",
       {0.0, 0.0},
       {from_angles({std::numbers::pi / 2, 0.0}),
        from_angles({std::numbers::pi, 0.0}),
        from_angles({std::numbers::pi / 2, std::numbers::pi / 2})},
       SphericalClassification::antipode_on_boundary(1)},
      {"triangle",
       "(0, 0) rad",
       {0.0, 0.0},
       {from_angles({std::numbers::pi / 6, 0.0}),
        from_angles({std::numbers::pi / 4, std::numbers::pi / 2}),
        from_angles({std::numbers::pi / 6, std::numbers::pi})},
       SphericalClassification::boundary(3)},
      {"star",
       "(90, 45) deg",
       {90.0 * deg, 45.0 * deg},
       {from_angles({45.0 * deg, std::acos(0.125)}),
        from_angles({60.0 * deg, 30.0 * deg}),
        from_angles({90.0 * deg, 0.0 * deg}),
        from_angles({120.0 * deg, 30.0 * deg}),
        from_angles({90.0 * deg, 60.0 * deg}),
        from_angles({45.0 * deg, std::acos(0.125)}),
        from_angles({90.0 * deg, 30.0 * deg}),
        from_angles({120.0 * deg, 60.0 * deg}),
        from_angles({90.0 * deg, 90.0 * deg}),
        from_angles({60.0 * deg, 60.0 * deg})},
       SphericalClassification::interior(2)},
  };

  char buf[256];
  std::string table;
  const char* fmt = "%-9s %-13s %-9s %-32s %-32s %s\n";
  std::snprintf(buf, sizeof(buf), fmt, "fixture", "query", "method",
                "expected", "actual", "ok");
  table += buf;
  bool all = true;
  for (const Case& c : cases) {
    const SphericalPolygon g(c.verts);
    const UnitVector3 q = from_angles(c.q);
    for (const Method m : expand(Method::kBoth)) {
      std::string actual;
      bool match = false;
      try {
        const SphericalClassification got =
            m == Method::kRotation ? rotation::classify(g, c.q)
                                   : shearing::classify(g, q);
        actual = to_string(got);
        match = got == c.expected;
      } catch (const DegeneracyError& e) {
        actual = std::string("error: ") + e.what();
      }
      all = all && match;
      std::snprintf(buf, sizeof(buf), fmt, c.name, c.query_label,
                    to_string(m).c_str(), to_string(c.expected).c_str(),
                    actual.c_str(), match ? "yes" : "NO");
      table += buf;
    }
  }
  table += all ? "all 6 checks passed\n" : "some checks FAILED\n";
  return {table, all};
}

}  // namespace spip::cli
