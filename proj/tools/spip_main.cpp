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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spip/job.hpp"
#include "spip/rotation.hpp"
#include "spip/shearing.hpp"
#include "spip/svg.hpp"

namespace {

using namespace spip;

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  out << content;
  if (!out) {
    std::cerr << "error: failed writing " << path << "\n";
    return 2;
  }
  return 0;
}

int emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return 0;
  }
  return write_file(output_path, content);
}

std::optional<SphericalPolygon> try_build(const std::vector<Vec3>& vertices,
                                          bool normalize) {
  try {
    std::vector<UnitVector3> unit;
    unit.reserve(vertices.size());
    for (const Vec3& v : vertices) {
      unit.emplace_back(normalize ? UnitVector3::normalized(v)
                                  : UnitVector3(v));
    }
    return SphericalPolygon(std::move(unit));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string render_projections(const cli::JobSpec& job, bool normalize) {
  std::vector<cli::PlotPanel> panels;
  for (const auto& pt : job.points) {
    const UnitVector3 q = from_angles(pt.angles);
    const rotation::RotationMatrix3 r = rotation::rotation_to_north(pt.angles);
    const shearing::ShearPlan plan = shearing::plan_shear(q);
    for (const auto& poly : job.polygons) {
      const auto g = try_build(poly.vertices, normalize);
      if (!g.has_value()) continue;
      if (job.method != cli::Method::kShearing) {
        panels.push_back({pt.id + " / " + poly.id + " (rotation)",
                          rotation::project(*g, r).vertices()});
      }
      if (job.method != cli::Method::kRotation) {
        panels.push_back({pt.id + " / " + poly.id + " (shearing)",
                          shearing::project(*g, plan).vertices()});
      }
    }
  }
  return cli::render_svg(panels);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classifies query points as boundary, interior, or exterior of "
      "spherical polygons bounded by minor great-circle arcs"};
  app.require_subcommand(1);

  std::string input, output, plot, method_str, tolerance_str;
  double tolerance = kDefaultTolerance;
  bool verify = false, degrees = false, strict = false, normalize = false;
  int oracle_segments = 64;

  CLI::App* classify =
      app.add_subcommand("classify", "Classify points from a job document");
  classify->add_option("--input,-i", input, "job document, one record per line")
      ->required();
  classify->add_option("--method,-m", method_str,
                       "projection to use (default from the document: both)")
      ->check(CLI::IsMember({"rotation", "shearing", "both"}));
  classify->add_flag("--verify", verify,
                     "re-check every result against the reference classifier");
  classify
      ->add_option("--tolerance,-t", tolerance,
                   "boundary-test tolerance (default 1e-12)")
      ->check(CLI::PositiveNumber);
  classify->add_flag("--degrees", degrees,
                     "interpret all input angles as degrees");
  classify->add_flag("--strict-validate", strict,
                     "reject polygons failing the full validation suite");
  classify->add_flag("--normalize", normalize,
                     "rescale input vectors to unit length");
  classify->add_option("--plot", plot,
                       "write an SVG of the projected polygons here");
  classify->add_option("--output,-o", output,
                       "write result records here instead of stdout");
  classify
      ->add_option("--oracle-segments", oracle_segments,
                   "subdivision depth for --verify (default 64)")
      ->check(CLI::PositiveNumber);

  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "Run the built-in demonstration cases and print the "
                  "expected-vs-actual table");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Report unit-norm, edge, boundary antipode-exclusion, and "
                  "hemisphere checks for every polygon");
  std::string v_input, v_output;
  bool v_normalize = false, v_degrees = false;
  validate_cmd
      ->add_option("--input,-i", v_input, "job document, one record per line")
      ->required();
  validate_cmd->add_flag("--degrees", v_degrees,
                         "interpret all input angles as degrees");
  validate_cmd->add_flag("--normalize", v_normalize,
                         "rescale input vectors to unit length");
  validate_cmd->add_option("--output,-o", v_output,
                           "write validation records here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fixtures->parsed()) {
    const cli::FixtureOutcome out = cli::run_fixtures();
    std::cout << out.table;
    return out.all_match ? 0 : 1;
  }

  if (classify->parsed()) {
    cli::JobOptions opts;
    if (degrees) opts.force_angle_unit = cli::AngleUnit::kDegrees;
    opts.strict_validate = strict;
    opts.normalize = normalize;
    opts.oracle_segments = oracle_segments;

    cli::JobSpec job;
    try {
      job = cli::parse_job_file(input, opts);
    } catch (const cli::ParseError& e) {
      std::cerr << "error: " << input << ": " << e.what() << "\n";
      return 2;
    }
    if (classify->count("--method") > 0) {
      job.method = *cli::method_from_string(method_str);
    }
    if (classify->count("--tolerance") > 0) job.tolerance = tolerance;
    if (verify) job.verify = true;

    const cli::RunReport rep = cli::run(job, opts);
    const int emit_rc = emit(output, cli::emit_results(rep));
    if (emit_rc != 0) return emit_rc;
    if (classify->count("--plot") > 0) {
      const int rc = write_file(plot, render_projections(job, normalize));
      if (rc != 0) return rc;
    }
    return rep.exit_code;
  }

  if (validate_cmd->parsed()) {
    cli::JobOptions opts;
    if (v_degrees) opts.force_angle_unit = cli::AngleUnit::kDegrees;
    opts.normalize = v_normalize;

    cli::JobSpec job;
    try {
      job = cli::parse_job_file(v_input, opts);
    } catch (const cli::ParseError& e) {
      std::cerr << "error: " << v_input << ": " << e.what() << "\n";
      return 2;
    }

    std::vector<cli::ValidationRecord> records;
    bool all_pass = true;
    for (const auto& poly : job.polygons) {
      std::vector<Vec3> verts = poly.vertices;
      if (v_normalize) {
        for (Vec3& v : verts) {
          const double n = v.norm();
          if (n > 1e-150) v = v / n;
        }
      }
      ValidationReport rep = validate(verts, ValidationLevel::kFull);
      all_pass = all_pass && rep.pass();
      records.push_back({poly.id, std::move(rep)});
    }
    const int emit_rc = emit(v_output, cli::emit_validations(records));
    if (emit_rc != 0) return emit_rc;
    return all_pass ? 0 : 3;
  }

  return 2;
}
