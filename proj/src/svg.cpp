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

#include "fagnano/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "fagnano/io.hpp"

namespace fagnano {
namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void Add(Complex c) {
    min_x = std::min(min_x, c.real());
    max_x = std::max(max_x, c.real());
    min_y = std::min(min_y, c.imag());
    max_y = std::max(max_y, c.imag());
  }
  bool empty() const { return min_x > max_x; }
  double extent() const { return std::max(max_x - min_x, max_y - min_y); }
};

Box Bounds(const SvgScene& scene) {
  Box box;
  for (const SvgPolygon& p : scene.polygons) {
    for (Eigen::Index i = 0; i < p.polygon.size(); ++i) box.Add(p.polygon[i]);
  }
  for (Complex c : scene.points) box.Add(c);
  return box;
}

std::string Num(double x) { return FormatDouble(x); }

}  // namespace

std::string RenderSvg(const SvgScene& scene) {
  Box box = Bounds(scene);
  if (box.empty()) box.Add(Complex(0.0));
  double extent = box.extent();
  if (extent == 0.0) extent = 1.0;
  const double margin = 0.1 * extent;
  const double w = (box.max_x - box.min_x) + 2 * margin;
  const double h = (box.max_y - box.min_y) + 2 * margin;
  // Screen y is -y.
  const double x0 = box.min_x - margin;
  const double y0 = -box.max_y - margin;
  const double stroke = 0.004 * extent;
  const double dot = 0.012 * extent;
  const double font = 0.035 * extent;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << Num(x0)
      << ' ' << Num(y0) << ' ' << Num(w) << ' ' << Num(h) << "\">\n";
  if (!scene.title.empty()) out << "  <title>" << scene.title << "</title>\n";
  for (const SvgPolygon& p : scene.polygons) {
    out << "  <polygon points=\"";
    for (Eigen::Index i = 0; i < p.polygon.size(); ++i) {
      if (i > 0) out << ' ';
      out << Num(p.polygon[i].real()) << ',' << Num(-p.polygon[i].imag());
    }
    out << "\" fill=\"" << (p.filled ? p.color : "none") << "\""
        << (p.filled ? " fill-opacity=\"0.3\"" : "") << " stroke=\""
        << p.color << "\" stroke-width=\"" << Num(stroke) << "\"/>\n";
  }
  for (Complex c : scene.points) {
    out << "  <circle cx=\"" << Num(c.real()) << "\" cy=\"" << Num(-c.imag())
        << "\" r=\"" << Num(dot) << "\" fill=\"#d62728\"/>\n";
  }
  for (const SvgPolygon& p : scene.polygons) {
    if (p.label_prefix.empty()) continue;
    for (Eigen::Index i = 0; i < p.polygon.size(); ++i) {
      out << "  <text x=\"" << Num(p.polygon[i].real() + dot) << "\" y=\""
          << Num(-p.polygon[i].imag() - dot) << "\" font-size=\"" << Num(font)
          << "\">" << p.label_prefix << '_' << (i + 1) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

SvgScene SideBySide(const std::vector<SvgScene>& panels) {
  SvgScene out;
  double offset = 0.0;
  for (const SvgScene& panel : panels) {
    const Box box = Bounds(panel);
    if (box.empty()) continue;
    const double extent = box.extent() > 0 ? box.extent() : 1.0;
    const Complex center(0.5 * (box.min_x + box.max_x),
                         0.5 * (box.min_y + box.max_y));
    auto place = [&](Complex c) {
      return (c - center) / extent + Complex(offset, 0.0);
    };
    for (const SvgPolygon& p : panel.polygons) {
      SvgPolygon moved = p;
      moved.polygon = Polygon(
          p.polygon.vertices().unaryExpr(place).eval());
      out.polygons.push_back(std::move(moved));
    }
    for (Complex c : panel.points) out.points.push_back(place(c));
    offset += 1.25;
  }
  return out;
}

}  // namespace fagnano
