#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "cp1graft/circles.hpp"
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

// Undirected tangent direction mod pi of the Euclidean circle |z - c| = r at z.
double tangent_mod_pi(cplx c, cplx z) {
  double t = std::arg(z - c) + kPi / 2;
  return std::fmod(std::fmod(t, kPi) + kPi, kPi);
}

// Independent oracle for angle_at on two finite Euclidean circles.
double oracle_angle(cplx c1, cplx c2, cplx x) {
  double d = tangent_mod_pi(c2, x) - tangent_mod_pi(c1, x);
  return std::fmod(std::fmod(d, kPi) + kPi, kPi);
}

struct Rng {
  std::mt19937_64 gen{777};
  std::normal_distribution<double> n{0.0, 1.0};
  cplx c() { return {n(gen), n(gen)}; }
  MobiusMap map() {
    for (;;) {
      cplx a = c(), b = c(), cc = c(), d = c();
      if (std::abs(a * d - b * cc) > 0.1) return MobiusMap(a, b, cc, d);
    }
  }
  Circle circle() { return circle_through(F(c()), F(c()), F(c())); }
};

}  // namespace

TEST(Circle, NormalizationAndValidation) {
  Circle c(2.0, cplx(3.0, 1.0), 4.0);
  EXPECT_NEAR(std::norm(c.B()) - c.A() * c.C(), 1.0, 1e-14);
  EXPECT_EQ(code_of([] { Circle(1.0, 0.0, 1.0); }), ErrorCode::InvalidCircle);
}

TEST(CircleThrough, Examples) {
  EXPECT_LT(oriented_form_distance(circle_through(F(0.0), F(1.0), RiemannPoint::infinity()), Circle::real_axis()),
            1e-12);
  EXPECT_LT(oriented_form_distance(circle_through(F(1.0), F(I), F(-1.0)), Circle::unit()), 1e-12);
  EXPECT_LT(oriented_form_distance(circle_through(F(0.0), F(2.0), F(1.0 + I)), Circle::euclidean(1.0, 1.0)), 1e-12);
  // Reversing the traversal flips the orientation only.
  Circle rev = circle_through(F(-1.0), F(I), F(1.0));
  EXPECT_LT(form_distance(rev, Circle::unit()), 1e-12);
  EXPECT_LT(oriented_form_distance(rev, Circle::unit().reversed()), 1e-12);
  EXPECT_EQ(code_of([] { circle_through(F(1.0), F(1.0), F(2.0)); }), ErrorCode::CoincidentPoints);
}

TEST(Reflect, Examples) {
  AntiMobiusMap j = reflect(Circle::unit());
  EXPECT_TRUE(same_point(apply(j, F(2.0)), F(0.5)));
  EXPECT_TRUE(same_point(apply(j, F(0.0)), RiemannPoint::infinity()));
  EXPECT_TRUE(same_point(apply(j, F(I)), F(I)));
  AntiMobiusMap r = reflect(Circle::real_axis());
  EXPECT_TRUE(same_point(apply(r, F(1.0 + 2.0 * I)), F(1.0 - 2.0 * I)));
}

TEST(Reflect, RandomInvolutionFixingTheCircle) {
  Rng r;
  for (int n = 0; n < 1000; ++n) {
    Circle c = r.circle();
    AntiMobiusMap j = reflect(c);
    EXPECT_LT(psl_distance(compose(j, j), MobiusMap()), 1e-9);
    for (double t : {0.3, 2.0, 4.5}) {
      RiemannPoint p = point_on(c, t);
      EXPECT_LT(chordal_distance(apply(j, p), p), 1e-9);
    }
    RiemannPoint q = F(r.c());
    int s = side_of(c, q);
    if (s != 0) {
      EXPECT_EQ(side_of(c, apply(j, q)), -s);
    }
  }
}

TEST(Intersect, Examples) {
  auto p = intersect(Circle::real_axis(), Circle::unit());
  ASSERT_EQ(p.size(), 2u);
  for (const auto& x : p) EXPECT_NEAR(std::abs(std::abs(x.affine().real()) - 1.0) + std::abs(x.affine().imag()), 0.0, 1e-12);
  EXPECT_FALSE(same_point(p[0], p[1]));
  EXPECT_TRUE(intersect(Circle::unit(), Circle::euclidean(3.0, 1.0)).empty());
  EXPECT_EQ(intersect(Circle::unit(), Circle::euclidean(2.0, 1.0)).size(), 1u);
  auto q = intersect(Circle::unit(), Circle::euclidean(1.0, 1.0));
  ASSERT_EQ(q.size(), 2u);
  for (const auto& x : q) {
    cplx z = x.affine();
    EXPECT_NEAR(z.real(), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(z.imag()), std::sqrt(3.0) / 2, 1e-12);
  }
  EXPECT_EQ(code_of([] { intersect(Circle::unit(), Circle::unit().reversed()); }), ErrorCode::EqualCircles);
}

TEST(AngleAt, Examples) {
  auto p = intersect(Circle::real_axis(), Circle::unit());
  for (const auto& x : p) EXPECT_NEAR(angle_at(Circle::real_axis(), Circle::unit(), x).radians(), kPi / 2, 1e-12);
  const cplx e = std::polar(1.0, kPi / 3);
  double at_e = angle_at(Circle::unit(), Circle::euclidean(1.0, 1.0), F(e)).radians();
  double at_ebar = angle_at(Circle::unit(), Circle::euclidean(1.0, 1.0), F(std::conj(e))).radians();
  EXPECT_NEAR(at_e, kPi / 3, 1e-12);
  EXPECT_NEAR(at_e + at_ebar, kPi, 1e-12);
  EXPECT_EQ(code_of([] { angle_at(Circle::unit(), Circle::real_axis(), F(0.0)); }), ErrorCode::PointNotOnCircles);
  EXPECT_EQ(code_of([] { angle_at(Circle::unit(), Circle::euclidean(2.0, 1.0), F(1.0)); }),
            ErrorCode::TangentCircles);
}

TEST(AngleAt, AgreesWithTangentOracle) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0), rad(0.5, 2.0);
  int checked = 0;
  while (checked < 500) {
    cplx c1(u(gen), u(gen)), c2(u(gen), u(gen));
    double r1 = rad(gen), r2 = rad(gen);
    double d = std::abs(c1 - c2);
    if (d >= r1 + r2 - 0.05 || d <= std::abs(r1 - r2) + 0.05) continue;
    Circle k1 = Circle::euclidean(c1, r1), k2 = Circle::euclidean(c2, r2);
    for (const auto& x : intersect(k1, k2)) {
      EXPECT_NEAR(angle_at(k1, k2, x).radians(), oracle_angle(c1, c2, x.affine()), 1e-9);
    }
    ++checked;
  }
}

TEST(AngleAt, ReflectionProductRotatesByTwiceTheAngle) {
  Rng r;
  int checked = 0;
  while (checked < 500) {
    Circle c1 = r.circle(), c2 = r.circle();
    if (std::abs(inversive_product(c1, c2)) > 0.95) continue;
    MobiusMap g = compose(reflect(c2), reflect(c1));
    for (const auto& x : intersect(c1, c2)) {
      double two = 2 * angle_at(c1, c2, x).radians();
      EXPECT_NEAR(rotation_angle(g, x).radians(), two, 1e-7);
    }
    ++checked;
  }
}

TEST(AngleAt, MobiusInvariant) {
  Rng r;
  int checked = 0;
  while (checked < 500) {
    Circle c1 = r.circle(), c2 = r.circle();
    if (std::abs(inversive_product(c1, c2)) > 0.95) continue;
    MobiusMap m = r.map();
    Circle d1 = transform_circle(m, c1), d2 = transform_circle(m, c2);
    for (const auto& x : intersect(c1, c2)) {
      EXPECT_NEAR(angle_at(d1, d2, apply(m, x)).radians(), angle_at(c1, c2, x).radians(), 1e-7);
    }
    ++checked;
  }
}

TEST(SideOf, Examples) {
  EXPECT_EQ(side_of(Circle::unit(), F(0.0)), -1);
  EXPECT_EQ(side_of(Circle::unit(), F(2.0)), 1);
  EXPECT_EQ(side_of(Circle::unit(), F(1.0)), 0);
  EXPECT_EQ(side_of(Circle::unit(), RiemannPoint::infinity()), 1);
  EXPECT_EQ(side_of(Circle::real_axis(), F(I)), -1);
  EXPECT_EQ(side_of(Circle::line(0.0, 1.0), F(I)), -1);
}

TEST(TransformCircle, Translation) {
  Circle t = transform_circle(MobiusMap(1.0, 1.0, 0.0, 1.0), Circle::unit());
  EXPECT_LT(oriented_form_distance(t, Circle::euclidean(1.0, 1.0)), 1e-12);
}

TEST(TransformCircle, PointsStayOnImage) {
  Rng r;
  for (int n = 0; n < 500; ++n) {
    Circle c = r.circle();
    MobiusMap m = r.map();
    Circle d = transform_circle(m, c);
    for (double t : {0.1, 1.7, 3.3, 5.9}) EXPECT_TRUE(on_circle(d, apply(m, point_on(c, t)), 1e-8));
    RiemannPoint q = F(r.c());
    if (side_of(c, q) != 0) {
      EXPECT_EQ(side_of(d, apply(m, q)), side_of(c, q));
    }
  }
}

TEST(InversiveProduct, CosineOfAngle) {
  EXPECT_NEAR(inversive_product(Circle::unit(), Circle::real_axis()), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(inversive_product(Circle::unit(), Circle::euclidean(1.0, 1.0))), 0.5, 1e-14);
  EXPECT_NEAR(std::abs(inversive_product(Circle::unit(), Circle::euclidean(2.0, 1.0))), 1.0, 1e-14);
  EXPECT_GT(std::abs(inversive_product(Circle::unit(), Circle::euclidean(3.0, 1.0))), 1.0);
}
