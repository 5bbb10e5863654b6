// Copyright 2026 The Heatpath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEATPATH_RENDER_HPP_
#define HEATPATH_RENDER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "heatpath/error.hpp"
#include "heatpath/heatmap.hpp"
#include "heatpath/planners.hpp"

namespace heatpath {

struct RenderStyle {
  int cell_pixels = 16;
  // Low to high heat; palette classes are spread evenly over the stops.
  std::vector<std::string> heat_ramp{"#4575b4", "#91bfdb", "#fee090", "#fc8d59", "#d73027"};
  std::vector<std::string> path_colors{"#000000", "#1b9e77", "#7570b3", "#e7298a",
                                       "#66a61e", "#e6ab02", "#a6761d", "#666666"};

  void validate() const {
    if (cell_pixels < 2) throw ArgumentError("cell_pixels must be >= 2");
    if (heat_ramp.empty()) throw ArgumentError("heat ramp needs at least one color");
    if (path_colors.empty()) throw ArgumentError("need at least one path color");
  }

  // Colors beyond the configured list are generated on a golden-angle hue
  // walk so every UAV gets its own.
  std::string path_color(std::size_t uav) const {
    if (uav < path_colors.size()) return path_colors[uav];
    const double hue = std::fmod(static_cast<double>(uav) * 137.508, 360.0);
    return "hsl(" + std::to_string(static_cast<int>(hue)) + ",70%,35%)";
  }
};

// Heat cells as filled squares, each trajectory as polylines of neighbor
// steps plus one dashed line per skip-jump, and one marker per distinct depot.
// Throws ArgumentError when the plan was made for a map of another size.
inline std::string render_svg(const Heatmap& map, const MultiPlan& plan,
                              const ClassPalette& palette, const RenderStyle& style = {}) {
  style.validate();
  if (plan.rows != map.height() || plan.cols != map.width()) {
    throw ArgumentError("plan is " + std::to_string(plan.rows) + "x" + std::to_string(plan.cols) +
                        " but map is " + std::to_string(map.height()) + "x" +
                        std::to_string(map.width()));
  }
  const int px = style.cell_pixels;
  const double half = px / 2.0;
  auto cx = [&](VertexId v) { return v.j * px + half; };
  auto cy = [&](VertexId v) { return v.i * px + half; };
  auto num = [](double v) { return format_shortest(v); };

  std::ostringstream out;
  const int w = map.width() * px;
  const int h = map.height() * px;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";

  out << "<g class=\"heatmap\">\n";
  const std::size_t classes = palette.size();
  for (int i = 0; i < map.height(); ++i) {
    for (int j = 0; j < map.width(); ++j) {
      const auto k = palette.index_of_heat(map.at(i, j)).value_or(0);
      const std::size_t stop =
          classes <= 1 ? 0
                       : static_cast<std::size_t>(std::lround(static_cast<double>(k) *
                                                              (style.heat_ramp.size() - 1) /
                                                              (classes - 1)));
      out << "<rect class=\"cell\" x=\"" << j * px << "\" y=\"" << i * px << "\" width=\"" << px
          << "\" height=\"" << px << "\" fill=\"" << style.heat_ramp[stop] << "\"/>\n";
    }
  }
  out << "</g>\n";

  const double stroke = std::max(1.0, px / 6.0);
  out << "<g class=\"paths\" fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\" "
         "stroke-width=\""
      << num(stroke) << "\">\n";
  for (const Trajectory& t : plan.trajectories) {
    const std::string color = style.path_color(static_cast<std::size_t>(t.uav_index));
    std::vector<VertexId> run{t.vertices.front()};
    auto flush = [&] {
      if (run.size() >= 2) {
        out << "<polyline class=\"path uav-" << t.uav_index << "\" stroke=\"" << color
            << "\" points=\"";
        for (std::size_t k = 0; k < run.size(); ++k) {
          if (k > 0) out << ' ';
          out << num(cx(run[k])) << ',' << num(cy(run[k]));
        }
        out << "\"/>\n";
      }
    };
    for (std::size_t m = 0; m < t.moves.size(); ++m) {
      const VertexId a = t.vertices[m];
      const VertexId b = t.vertices[m + 1];
      if (t.moves[m] == MoveKind::kSkip) {
        flush();
        out << "<line class=\"skip uav-" << t.uav_index << "\" stroke=\"" << color
            << "\" stroke-dasharray=\"" << num(px / 2.0) << ' ' << num(px / 3.0) << "\" x1=\""
            << num(cx(a)) << "\" y1=\"" << num(cy(a)) << "\" x2=\"" << num(cx(b))
            << "\" y2=\"" << num(cy(b)) << "\"/>\n";
        run.assign({b});
      } else {
        run.push_back(b);
      }
    }
    flush();
  }
  out << "</g>\n";

  out << "<g class=\"depots\">\n";
  std::vector<VertexId> drawn;
  for (const VertexId d : plan.depots) {
    if (std::find(drawn.begin(), drawn.end(), d) != drawn.end()) continue;
    drawn.push_back(d);
    out << "<circle class=\"depot\" cx=\"" << num(cx(d)) << "\" cy=\"" << num(cy(d)) << "\" r=\""
        << num(px / 3.0) << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace heatpath

#endif  // HEATPATH_RENDER_HPP_
