#include "cp1graft/configurations.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::Euclidean: return "euclidean";
    case ConfigKind::Spherical: return "spherical";
    case ConfigKind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

namespace {

// Anticlockwise cyclic order of the tangent directions at p, which lies on
// all three circles.
int cyclic_order_at(const std::array<Circle, 3>& circles, const RiemannPoint& p, const RiemannPoint& away) {
  MobiusMap n = normalize_pair(p, away);
  std::array<double, 3> dir{};
  for (int i = 0; i < 3; ++i) {
    // At 0 the tangent of a circle through 0 has direction i*B.
    cplx b = transform_circle(n, circles[i]).B();
    double phi = std::arg(cplx(0.0, 1.0) * b);
    phi = std::fmod(phi + 2.0 * kPi, kPi);
    dir[i] = phi;
  }
  // Cyclic order on RP^1 of three distinct directions.
  bool ccw = (dir[0] < dir[1] && dir[1] < dir[2]) || (dir[1] < dir[2] && dir[2] < dir[0]) ||
             (dir[2] < dir[0] && dir[0] < dir[1]);
  return ccw ? 1 : -1;
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

CircleConfiguration build_configuration(const Circle& c1, const Circle& c2, const Circle& c3) {
  std::array<Circle, 3> circles{c1, c2, c3};
  std::array<PairIntersection, 3> pairs;
  for (int s = 0; s < 3; ++s) {
    const Circle& a = circles[kPairCircles[s][0]];
    const Circle& b = circles[kPairCircles[s][1]];
    std::vector<RiemannPoint> pts;
    try {
      pts = intersect(a, b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EqualCircles) fail(ErrorCode::DegenerateConfiguration, "two circles coincide");
      throw;
    }
    if (pts.size() != 2) fail(ErrorCode::DegenerateConfiguration, "a pair of circles is tangent or disjoint");
    pairs[s] = {pts[0], pts[1]};
  }
  std::vector<RiemannPoint> common;
  for (const RiemannPoint& p : {pairs[kPair12].x, pairs[kPair12].y}) {
    if (on_circle(circles[2], p, geom_tol())) common.push_back(p);
  }
  if (common.size() == 2) fail(ErrorCode::DegenerateConfiguration, "coaxial circles: only 2 intersection points");
  ConfigKind kind;
  std::optional<RiemannPoint> common_point;
  int order = 0;
  if (common.size() == 1) {
    kind = ConfigKind::Euclidean;
    common_point = common[0];
    const PairIntersection& p12 = pairs[kPair12];
    const RiemannPoint& away = chordal_distance(p12.x, common[0]) > chordal_distance(p12.y, common[0]) ? p12.x : p12.y;
    order = cyclic_order_at(circles, common[0], away);
  } else {
    int s = side_of(circles[0], pairs[kPair23].x) * side_of(circles[0], pairs[kPair23].y);
    kind = s < 0 ? ConfigKind::Spherical : ConfigKind::Hyperbolic;
  }
  return CircleConfiguration(circles, pairs, kind, common_point, order);
}

bool separates(const CircleConfiguration& cfg, int circle_index) {
  static constexpr PairSlot opposite[3] = {kPair23, kPair13, kPair12};
  const PairIntersection& p = cfg.pair(opposite[circle_index]);
  const Circle& c = cfg.circle(circle_index);
  return side_of(c, p.x) * side_of(c, p.y) < 0;
}

Circle dual_circle(const CircleConfiguration& cfg) {
  if (cfg.kind() != ConfigKind::Hyperbolic) fail(ErrorCode::NotHyperbolic, "dual circle needs a hyperbolic configuration");
  // <H, H_i> = 0 is linear in (A, Re B, Im B, C).
  std::array<std::array<double, 4>, 3> rows;
  for (int i = 0; i < 3; ++i) {
    const Circle& c = cfg.circle(i);
    rows[i] = {-0.5 * c.C(), c.B().real(), c.B().imag(), -0.5 * c.A()};
  }
  std::array<double, 4> n{};
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<double, 3>, 3> minor;
    for (int i = 0; i < 3; ++i) {
      int col = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == j) continue;
        minor[i][col++] = rows[i][k];
      }
    }
    n[j] = ((j % 2) ? -1.0 : 1.0) * det3(minor);
  }
  int big = 0;
  for (int j = 1; j < 4; ++j) {
    if (std::abs(n[j]) > std::abs(n[big])) big = j;
  }
  double sign = n[big] < 0 ? -1.0 : 1.0;
  return Circle(sign * n[0], sign * cplx(n[1], n[2]), sign * n[3]);
}

EllipticTriple to_elliptic_triple(const CircleConfiguration& cfg) {
  AntiMobiusMap j1 = reflect(cfg.circle(0));
  AntiMobiusMap j2 = reflect(cfg.circle(1));
  AntiMobiusMap j3 = reflect(cfg.circle(2));
  return {compose(j3, j1), compose(j1, j2), compose(j2, j3)};
}

double product_residual(const EllipticTriple& t) {
  return psl_distance(t.A * t.B * t.C, MobiusMap::identity());
}

namespace {

std::vector<RiemannPoint> merged_fixed_points(const MobiusMap& g, const MobiusMap& h) {
  std::vector<RiemannPoint> pts;
  for (const MobiusMap* m : {&g, &h}) {
    for (const RiemannPoint& p : fixed_points(*m)) {
      bool dup = std::any_of(pts.begin(), pts.end(),
                             [&](const RiemannPoint& q) { return chordal_distance(p, q) < geom_tol(); });
      if (!dup) pts.push_back(p);
    }
  }
  return pts;
}

double min_pairwise(const RiemannPoint& a, const RiemannPoint& b, const RiemannPoint& c) {
  return std::min({chordal_distance(a, b), chordal_distance(b, c), chordal_distance(a, c)});
}

Circle circle_of_fixed_points(const MobiusMap& g, const MobiusMap& h) {
  std::vector<RiemannPoint> pts = merged_fixed_points(g, h);
  if (pts.size() < 3) fail(ErrorCode::DegenerateTriple, "two generators share both fixed points");
  if (pts.size() == 3) return circle_through(pts[0], pts[1], pts[2]);
  // Four points: fit the best-conditioned triple, then check the fourth.
  int skip = 0;
  double best = -1.0;
  for (int s = 0; s < 4; ++s) {
    std::array<int, 3> idx{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != s) idx[k++] = i;
    }
    double q = min_pairwise(pts[idx[0]], pts[idx[1]], pts[idx[2]]);
    if (q > best) {
      best = q;
      skip = s;
    }
  }
  std::array<int, 3> idx{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != skip) idx[k++] = i;
  }
  Circle c = circle_through(pts[idx[0]], pts[idx[1]], pts[idx[2]]);
  if (!on_circle(c, pts[skip], geom_tol())) {
    fail(ErrorCode::DegenerateTriple, "fixed points of two generators are not concyclic");
  }
  return c;
}

}  // namespace

CircleConfiguration from_elliptic_triple(const EllipticTriple& t) {
  for (const MobiusMap* g : {&t.A, &t.B, &t.C}) {
    if (classify(*g) != MapClass::Elliptic) fail(ErrorCode::DegenerateTriple, "generator is not elliptic");
  }
  if (product_residual(t) > geom_tol()) fail(ErrorCode::DegenerateTriple, "product of the triple is not the identity");
  Circle cab = circle_of_fixed_points(t.A, t.B);
  Circle cbc = circle_of_fixed_points(t.B, t.C);
  Circle cac = circle_of_fixed_points(t.A, t.C);
  try {
    return build_configuration(cab, cbc, cac);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateConfiguration) fail(ErrorCode::DegenerateTriple, e.what());
    throw;
  }
}

double VertexRotationReport::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max({m, e.rotation_residual, e.product_distance});
  return m;
}

VertexRotationReport verify_vertex_rotation(const EllipticTriple& t, const CircleConfiguration& cfg) {
  std::array<AntiMobiusMap, 3> j{reflect(cfg.circle(0)), reflect(cfg.circle(1)), reflect(cfg.circle(2))};
  // Generator, its reflection product J_{.,second} J_{.,first}, and the
  // ordered circle pair whose angle is half its rotation.
  struct Spec {
    const MobiusMap* g;
    int first, second;
  };
  const std::array<Spec, 3> specs{{{&t.A, 0, 2}, {&t.B, 1, 0}, {&t.C, 2, 1}}};
  VertexRotationReport report;
  for (int k = 0; k < 3; ++k) {
    const Spec& s = specs[k];
    MobiusMap product = compose(j[s.second], j[s.first]);
    double dist = psl_distance(*s.g, product);
    if (dist > 1e-6) fail(ErrorCode::MismatchedInputs, "triple does not match the configuration's reflections");
    auto fps = fixed_points(*s.g);
    std::array<double, 2> res{};
    for (int i = 0; i < 2; ++i) {
      double rot = rotation_angle(*s.g, fps[i]).radians();
      double twice = 2.0 * angle_at(cfg.circle(s.first), cfg.circle(s.second), fps[i]).radians();
      double r = std::fmod(std::abs(rot - twice), 2.0 * kPi);
      res[i] = std::min(r, 2.0 * kPi - r);
    }
    int best = res[0] <= res[1] ? 0 : 1;
    VertexRotationEntry& e = report.entries[k];
    e.fixed_point = fps[best];
    e.rotation_residual = res[best];
    e.product_distance = dist;
    e.holds_at_both = res[1 - best] < geom_tol();
  }
  return report;
}

MobiusMap configuration_map(const std::array<RiemannPoint, 3>& from, const std::array<RiemannPoint, 3>& to) {
  return normalize_triple(to[0], to[1], to[2]).inverse() * normalize_triple(from[0], from[1], from[2]);
}

CircleConfiguration transform_configuration(const MobiusMap& m, const CircleConfiguration& cfg) {
  return build_configuration(transform_circle(m, cfg.circle(0)), transform_circle(m, cfg.circle(1)),
                             transform_circle(m, cfg.circle(2)));
}

}  // namespace cp1graft
