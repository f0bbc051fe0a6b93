#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp1graft/circles.hpp"
#include "cp1graft/configurations.hpp"
#include "cp1graft/triangles.hpp"

namespace cp1graft {

// Plane: the affine chart, circles through infinity drawn as clipped lines.
// Stereo: the sphere seen from above, w = 2z / sqrt(1 + |z|^2), which maps
// the sphere minus infinity onto the open disk of radius 2.
enum class Chart { Plane, Stereo };

struct SvgStyle {
  std::string stroke = "black";
  double width = 1.5;
  bool dashed = false;
  std::string css_class;
};

struct SvgPrimitive {
  enum class Kind { Circle, Line, Polyline, Point, Label } kind;
  std::vector<cplx> points;  // world coordinates
  double radius = 0.0;       // Circle only
  std::string text;          // Label, and the name of a Point
  SvgStyle style;
};

// Primitives in world coordinates inside the square [-half, half]^2.
class SvgScene {
 public:
  SvgScene(Chart chart, double half_width);

  Chart chart() const { return chart_; }
  double half_width() const { return half_; }
  const std::vector<SvgPrimitive>& items() const { return items_; }

  void add_circle(const Circle& c, const SvgStyle& style);
  // Points at infinity are listed in a corner legend. The stereo chart also
  // draws the boundary circle that stands for infinity.
  void add_point(const RiemannPoint& p, const std::string& name, const SvgStyle& style);
  void add_label(cplx at, const std::string& text);

  // Deterministic: fixed precision, fixed element order.
  std::string to_svg(int pixels = 600) const;

 private:
  cplx chart_point(const RiemannPoint& p) const;
  Chart chart_;
  double half_;
  std::vector<SvgPrimitive> items_;
  std::vector<std::string> at_infinity_;
};

// Liang-Barsky clip of the segment p + t d, t in [t0, t1], to the square
// [-half, half]^2. Returns the clipped endpoints.
std::optional<std::pair<cplx, cplx>> clip_segment(cplx p, cplx d, double t0, double t1, double half);

// The three circles, their labeled intersection points and, for hyperbolic
// configurations, the dashed dual circle. Vertices, when given, are drawn
// on top and named v1, v2, v3.
SvgScene configuration_scene(const CircleConfiguration& cfg, Chart chart,
                             const std::optional<std::array<RiemannPoint, 3>>& vertices = std::nullopt);

}  // namespace cp1graft
