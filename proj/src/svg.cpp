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

#include "spip/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace spip::cli {
namespace {

constexpr double kPanelSize = 240.0;
constexpr double kTitleStrip = 22.0;
constexpr int kColumns = 3;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<PlotPanel>& panels) {
  const int n = static_cast<int>(panels.size());
  const int cols = std::max(1, std::min(kColumns, n));
  const int rows = n == 0 ? 1 : (n + cols - 1) / cols;
  const double cell = kPanelSize + kTitleStrip;
  const double width = cols * kPanelSize + (cols + 1) * 10.0;
  const double height = rows * cell + (rows + 1) * 10.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
         " " + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int p = 0; p < n; ++p) {
    const PlotPanel& panel = panels[p];
    const double ox = 10.0 + (p % cols) * (kPanelSize + 10.0);
    const double oy = 10.0 + (p / cols) * (cell + 10.0) + kTitleStrip;

    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
    for (const PlanarPoint& pt : panel.outline) {
      lo_x = std::min(lo_x, pt.x);
      hi_x = std::max(hi_x, pt.x);
      lo_y = std::min(lo_y, pt.y);
      hi_y = std::max(hi_y, pt.y);
    }
    const double span =
        std::max({hi_x - lo_x, hi_y - lo_y, 1e-12}) * 1.1;
    const double cx = 0.5 * (lo_x + hi_x);
    const double cy = 0.5 * (lo_y + hi_y);
    const double scale = kPanelSize / span;
    const auto map_x = [&](double x) {
      return ox + kPanelSize / 2.0 + (x - cx) * scale;
    };
    const auto map_y = [&](double y) {
      return oy + kPanelSize / 2.0 - (y - cy) * scale;
    };

    out += "<text x=\"" + num(ox) + "\" y=\"" + num(oy - 7.0) +
           "\" font-family=\"monospace\" font-size=\"12\">" +
           escape(panel.label) + "</text>\n";
    out += "<rect x=\"" + num(ox) + "\" y=\"" + num(oy) + "\" width=\"" +
           num(kPanelSize) + "\" height=\"" + num(kPanelSize) +
           "\" fill=\"none\" stroke=\"#ccc\"/>\n";

    if (!panel.outline.empty()) {
      out += "<polygon points=\"";
      for (std::size_t i = 0; i < panel.outline.size(); ++i) {
        if (i > 0) out += ' ';
        out += num(map_x(panel.outline[i].x)) + "," +
               num(map_y(panel.outline[i].y));
      }
      out += "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    }

    const double zx = map_x(0.0), zy = map_y(0.0);
    out += "<path d=\"M " + num(zx - 5.0) + " " + num(zy) + " H " +
           num(zx + 5.0) + " M " + num(zx) + " " + num(zy - 5.0) + " V " +
           num(zy + 5.0) + "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace spip::cli
