#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "cp1graft/configurations.hpp"
#include "cp1graft/errors.hpp"

using namespace cp1graft;

namespace {

const cplx I(0.0, 1.0);

RiemannPoint F(cplx z) { return RiemannPoint::finite(z); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

CircleConfiguration octahedral() {
  return build_configuration(Circle::real_axis(), Circle::unit(), Circle::line(0.0, I));
}

// Equilateral hyperbolic triangle with angles pi/4 and a vertex at 0. The
// side length follows from cosh a = (cos t + cos^2 t) / sin^2 t.
CircleConfiguration hyperbolic_quarter() {
  const double t = kPi / 4;
  const double a = std::acosh((std::cos(t) + std::cos(t) * std::cos(t)) / (std::sin(t) * std::sin(t)));
  const double r = std::tanh(a / 2);
  const cplx p = r, q = std::polar(r, t);
  // The geodesic through p and q also passes through the inverse 1/conj(p).
  Circle pq = circle_through(F(p), F(q), F(1.0 / std::conj(p)));
  return build_configuration(Circle::real_axis(), pq, Circle::line(0.0, std::polar(1.0, t)));
}

struct Rng {
  std::mt19937_64 gen{2024};
  std::normal_distribution<double> n{0.0, 1.0};
  cplx c() { return {n(gen), n(gen)}; }
  MobiusMap map() {
    for (;;) {
      cplx a = c(), b = c(), cc = c(), d = c();
      if (std::abs(a * d - b * cc) > 0.1) return MobiusMap(a, b, cc, d);
    }
  }
  Circle circle() { return circle_through(F(c()), F(c()), F(c())); }
  // Random non-degenerate configuration with pairwise angles kept away from
  // tangency so that tolerances stay meaningful.
  CircleConfiguration configuration() {
    for (;;) {
      Circle a = circle(), b = circle(), d = circle();
      if (std::abs(inversive_product(a, b)) > 0.9 || std::abs(inversive_product(b, d)) > 0.9 ||
          std::abs(inversive_product(a, d)) > 0.9)
        continue;
      try {
        return build_configuration(a, b, d);
      } catch (const Error&) {
      }
    }
  }
};

double config_distance(const CircleConfiguration& x, const CircleConfiguration& y) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, form_distance(x.circle(i), y.circle(i)));
  return worst;
}

}  // namespace

TEST(BuildConfiguration, LinesThroughOriginAreDegenerate) {
  EXPECT_EQ(code_of([] {
              build_configuration(Circle::real_axis(), Circle::line(0.0, I), Circle::line(0.0, std::polar(1.0, 0.5)));
            }),
            ErrorCode::DegenerateConfiguration);
  EXPECT_EQ(code_of([] { build_configuration(Circle::unit(), Circle::euclidean(3.0, 1.0), Circle::real_axis()); }),
            ErrorCode::DegenerateConfiguration);
  EXPECT_EQ(code_of([] { build_configuration(Circle::unit(), Circle::euclidean(2.0, 1.0), Circle::real_axis()); }),
            ErrorCode::DegenerateConfiguration);
}

TEST(BuildConfiguration, OctahedralIsSpherical) {
  CircleConfiguration c = octahedral();
  EXPECT_EQ(c.kind(), ConfigKind::Spherical);
  EXPECT_EQ(c.distinct_points(), 6);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(separates(c, i));
  EXPECT_EQ(code_of([&] { dual_circle(c); }), ErrorCode::NotHyperbolic);
}

TEST(BuildConfiguration, HyperbolicTriangleHasUnitDual) {
  CircleConfiguration c = hyperbolic_quarter();
  EXPECT_EQ(c.kind(), ConfigKind::Hyperbolic);
  Circle d = dual_circle(c);
  EXPECT_LT(form_distance(d, Circle::unit()), 1e-9);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(inversive_product(d, c.circle(i)), 0.0, 1e-9);
  // Sanity of the construction: the angle at the vertex r is pi/4.
  RiemannPoint r = c.pair(kPair12).x;
  if (std::abs(r.affine()) > 1.0) r = c.pair(kPair12).y;
  double ang = angle_at(c.circle(0), c.circle(1), r).radians();
  EXPECT_NEAR(std::min(ang, kPi - ang), kPi / 4, 1e-9);
}

TEST(DualCircle, Equivariant) {
  Rng rng;
  CircleConfiguration c = hyperbolic_quarter();
  for (int n = 0; n < 200; ++n) {
    MobiusMap m = rng.map();
    CircleConfiguration mc = transform_configuration(m, c);
    ASSERT_EQ(mc.kind(), ConfigKind::Hyperbolic);
    EXPECT_LT(form_distance(dual_circle(mc), transform_circle(m, Circle::unit())), 1e-7);
  }
}

TEST(BuildConfiguration, EuclideanTriangleOfLines) {
  // Angles pi/6 at 0, pi/2 at 1, pi/3 at 1 + i tan(pi/6).
  const cplx p = 0.0, r = 1.0, q = 1.0 + I * std::tan(kPi / 6);
  CircleConfiguration c = build_configuration(Circle::line(p, q - p), Circle::line(q, r - q), Circle::line(r, p - r));
  EXPECT_EQ(c.kind(), ConfigKind::Euclidean);
  EXPECT_EQ(c.distinct_points(), 4);
  ASSERT_TRUE(c.common_point().has_value());
  EXPECT_TRUE(c.common_point()->is_infinity(1e-12));
  EXPECT_NE(c.common_point_cyclic_order(), 0);
  EXPECT_EQ(code_of([&] { dual_circle(c); }), ErrorCode::NotHyperbolic);

  EllipticTriple t = to_elliptic_triple(c);
  std::vector<double> got;
  for (const MobiusMap* g : {&t.A, &t.B, &t.C}) got.push_back(rotation_invariant(*g).first.radians());
  std::sort(got.begin(), got.end());
  EXPECT_NEAR(got[0], kPi / 3, 1e-9);
  EXPECT_NEAR(got[1], 2 * kPi / 3, 1e-9);
  EXPECT_NEAR(got[2], kPi, 1e-9);
}

TEST(ToEllipticTriple, Octahedral) {
  CircleConfiguration c = octahedral();
  EllipticTriple t = to_elliptic_triple(c);
  EXPECT_LT(product_residual(t), 1e-12);
  for (const MobiusMap* g : {&t.A, &t.B, &t.C}) {
    EXPECT_EQ(classify(*g), MapClass::Elliptic);
    EXPECT_NEAR(std::abs(g->trace_squared()), 0.0, 1e-12);
    auto [x, y] = rotation_invariant(*g);
    EXPECT_NEAR(x.radians(), kPi, 1e-9);
    EXPECT_NEAR(y.radians(), kPi, 1e-9);
  }
  EXPECT_LT(config_distance(from_elliptic_triple(t), c), 1e-12);
  VertexRotationReport rep = verify_vertex_rotation(t, c);
  EXPECT_LT(rep.max_residual(), 1e-9);
  const MobiusMap* gens[3] = {&t.A, &t.B, &t.C};
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(rotation_angle(*gens[i], rep.entries[i].fixed_point).radians(), kPi, 1e-9);
}

TEST(FromEllipticTriple, CoaxialIsDegenerate) {
  auto rot = [](double t) { return MobiusMap(std::polar(1.0, t), 0.0, 0.0, std::polar(1.0, -t)); };
  EllipticTriple t{rot(0.4), rot(0.7), rot(-1.1)};
  EXPECT_LT(product_residual(t), 1e-12);
  EXPECT_EQ(code_of([&] { from_elliptic_triple(t); }), ErrorCode::DegenerateTriple);
}

TEST(Bijection, RoundTripsBothWays) {
  Rng rng;
  int spherical = 0, hyperbolic = 0, euclidean = 0;
  for (int n = 0; n < 1000; ++n) {
    CircleConfiguration c = rng.configuration();
    spherical += c.kind() == ConfigKind::Spherical;
    hyperbolic += c.kind() == ConfigKind::Hyperbolic;
    euclidean += c.kind() == ConfigKind::Euclidean;
    EllipticTriple t = to_elliptic_triple(c);
    EXPECT_LT(product_residual(t), 1e-9);
    CircleConfiguration back = from_elliptic_triple(t);
    EXPECT_LT(config_distance(back, c), 1e-8);
    EXPECT_EQ(back.kind(), c.kind());
    EllipticTriple again = to_elliptic_triple(back);
    EXPECT_LT(psl_distance(again.A, t.A), 1e-8);
    EXPECT_LT(psl_distance(again.B, t.B), 1e-8);
    EXPECT_LT(psl_distance(again.C, t.C), 1e-8);
  }
  EXPECT_GT(spherical, 0);
  EXPECT_GT(hyperbolic, 0);
}

TEST(Classification, MobiusInvariantAndPointCounts) {
  Rng rng;
  for (int n = 0; n < 500; ++n) {
    CircleConfiguration c = rng.configuration();
    CircleConfiguration mc = transform_configuration(rng.map(), c);
    EXPECT_EQ(mc.kind(), c.kind());
    EXPECT_EQ(c.distinct_points(), c.kind() == ConfigKind::Euclidean ? 4 : 6);
  }
}

TEST(Classification, SeparationIsSymmetric) {
  Rng rng;
  for (int n = 0; n < 1000; ++n) {
    CircleConfiguration c = rng.configuration();
    if (c.kind() == ConfigKind::Euclidean) continue;
    bool s0 = separates(c, 0);
    EXPECT_EQ(separates(c, 1), s0);
    EXPECT_EQ(separates(c, 2), s0);
    EXPECT_EQ(c.kind() == ConfigKind::Spherical, s0);
  }
}

TEST(VertexRotation, RandomConfigurations) {
  Rng rng;
  for (int n = 0; n < 1000; ++n) {
    CircleConfiguration c = rng.configuration();
    VertexRotationReport rep = verify_vertex_rotation(to_elliptic_triple(c), c);
    EXPECT_LT(rep.max_residual(), 1e-8);
    for (const auto& e : rep.entries) EXPECT_TRUE(e.holds_at_both);
  }
}

TEST(VertexRotation, PermutedConfigurationMismatches) {
  CircleConfiguration c = hyperbolic_quarter();
  CircleConfiguration swapped = build_configuration(c.circle(1), c.circle(0), c.circle(2));
  EllipticTriple t = to_elliptic_triple(c);
  EXPECT_EQ(code_of([&] { verify_vertex_rotation(t, swapped); }), ErrorCode::MismatchedInputs);
}

TEST(ConfigurationMap, MatchingPointDataGivesTheMap) {
  Rng rng;
  for (int n = 0; n < 500; ++n) {
    CircleConfiguration c1 = rng.configuration();
    MobiusMap m = rng.map();
    CircleConfiguration c2 = transform_configuration(m, c1);
    std::array<RiemannPoint, 3> from{c1.pair(kPair12).x, c1.pair(kPair23).x, c1.pair(kPair13).x};
    std::array<RiemannPoint, 3> to{apply(m, from[0]), apply(m, from[1]), apply(m, from[2])};
    if (c1.kind() == ConfigKind::Euclidean) {
      // Labeled points may coincide at the common point; use the others.
      from = {c1.pair(kPair12).y, c1.pair(kPair23).y, c1.pair(kPair13).y};
      for (int i = 0; i < 3; ++i) to[i] = apply(m, from[i]);
      bool coincide = same_point(from[0], from[1]) || same_point(from[1], from[2]) || same_point(from[0], from[2]);
      if (coincide) continue;
    }
    MobiusMap got = configuration_map(from, to);
    EXPECT_LT(config_distance(transform_configuration(got, c1), c2), 1e-8);
  }
}
