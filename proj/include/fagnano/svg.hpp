// Copyright 2026 The Fagnano Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAGNANO_SVG_HPP_
#define FAGNANO_SVG_HPP_

#include <string>
#include <vector>

#include "fagnano/polygon.hpp"

namespace fagnano {

struct SvgPolygon {
  Polygon polygon;
  /// Tables are filled, overlays are stroked only.
  bool filled = false;
  /// Vertex labels are prefix_1..prefix_n; no labels when empty.
  std::string label_prefix;
  std::string color = "#1f77b4";
};

struct SvgScene {
  std::vector<SvgPolygon> polygons;
  std::vector<Complex> points;
  std::string title;
};

/// Standalone SVG document. The y axis is flipped so counterclockwise in
/// the plane stays counterclockwise on screen, and the view box covers all
/// geometry with a 10% margin.
std::string RenderSvg(const SvgScene& scene);

/// Lays scenes out left to right, each scaled into a unit cell.
SvgScene SideBySide(const std::vector<SvgScene>& panels);

}  // namespace fagnano

#endif  // FAGNANO_SVG_HPP_
