#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cp1graft/errors.hpp"
#include "cp1graft/mobius.hpp"

using namespace cp1graft;

namespace {

const cplx I(0.0, 1.0);

RiemannPoint F(cplx z) { return RiemannPoint::finite(z); }

MobiusMap diag_rot(double t) { return MobiusMap(std::polar(1.0, t / 2), 0.0, 0.0, std::polar(1.0, -t / 2)); }

struct Rng {
  std::mt19937_64 gen{12345};
  std::normal_distribution<double> n{0.0, 1.0};
  cplx c() { return {n(gen), n(gen)}; }
  double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  MobiusMap map() {
    for (;;) {
      cplx a = c(), b = c(), cc = c(), d = c();
      if (std::abs(a * d - b * cc) > 0.1) return MobiusMap(a, b, cc, d);
    }
  }
  // G diag(e^{it/2}, e^{-it/2}) G^{-1}: elliptic with rotation t at G(0).
  MobiusMap elliptic() {
    MobiusMap g = map();
    return g * diag_rot(u(0.05, 2 * kPi - 0.05)) * g.inverse();
  }
};

}  // namespace

TEST(RiemannPoint, NormalizesAndCompares) {
  RiemannPoint p(2.0, 4.0), q(1.0, 2.0);
  EXPECT_TRUE(same_point(p, q));
  EXPECT_TRUE(RiemannPoint(5.0, 0.0).is_infinity(1e-12));
  EXPECT_THROW(RiemannPoint(0.0, 0.0), Error);
  EXPECT_NEAR(chordal_distance(F(0.0), RiemannPoint::infinity()), 1.0, 1e-15);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(MobiusMap(1.0, 0.0, 0.0, 1.0)), MapClass::Identity);
  EXPECT_EQ(classify(MobiusMap(-1.0, 0.0, 0.0, -1.0)), MapClass::Identity);
  EXPECT_EQ(classify(MobiusMap(1.0, 1.0, 0.0, 1.0)), MapClass::Parabolic);
  MobiusMap e = diag_rot(2 * kPi / 3);
  EXPECT_EQ(classify(e), MapClass::Elliptic);
  EXPECT_NEAR(std::abs(e.trace_squared() - 1.0), 0.0, 1e-15);
  EXPECT_EQ(classify(MobiusMap(2.0, 0.0, 0.0, 0.5)), MapClass::Loxodromic);
  EXPECT_EQ(classify(MobiusMap(std::polar(2.0, 0.3), 0.0, 0.0, std::polar(0.5, -0.3))), MapClass::Loxodromic);
}

TEST(Classify, SingularMatrixRejected) {
  try {
    MobiusMap(1.0, 0.0, 0.0, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(Classify, ConjugationInvariant) {
  Rng r;
  const std::array<MobiusMap, 4> base{MobiusMap(), MobiusMap(1.0, 1.0, 0.0, 1.0), diag_rot(1.0), MobiusMap(3.0, 0.0, 0.0, 1.0 / 3)};
  for (int n = 0; n < 1000; ++n) {
    MobiusMap g = r.map();
    for (const auto& m : base) EXPECT_EQ(classify(g * m * g.inverse()), classify(m));
  }
}

TEST(FixedPoints, Examples) {
  auto fp = fixed_points(MobiusMap(2.0, 0.0, 0.0, 0.5));
  ASSERT_EQ(fp.size(), 2u);
  bool has0 = false, hasinf = false;
  for (const auto& p : fp) {
    has0 = has0 || same_point(p, F(0.0));
    hasinf = hasinf || same_point(p, RiemannPoint::infinity());
  }
  EXPECT_TRUE(has0 && hasinf);
  auto pp = fixed_points(MobiusMap(1.0, 1.0, 0.0, 1.0));
  ASSERT_EQ(pp.size(), 1u);
  EXPECT_TRUE(same_point(pp[0], RiemannPoint::infinity()));
  auto ee = fixed_points(MobiusMap(0.0, 1.0, -1.0, 0.0));
  ASSERT_EQ(ee.size(), 2u);
  // Oracle: roots of c z^2 + (d - a) z - b = -z^2 - 1, i.e. +-i.
  for (const auto& p : ee) EXPECT_NEAR(std::abs(p.affine() * p.affine() + 1.0), 0.0, 1e-12);
  EXPECT_FALSE(same_point(ee[0], ee[1]));
  EXPECT_THROW(fixed_points(MobiusMap()), Error);
}

TEST(RotationAngle, DiagonalExamples) {
  MobiusMap m = diag_rot(2 * kPi / 3);
  EXPECT_NEAR(rotation_angle(m, F(0.0)).radians(), 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(rotation_angle(m, RiemannPoint::infinity()).radians(), 4 * kPi / 3, 1e-12);
  auto [a, b] = rotation_invariant(m);
  EXPECT_NEAR(a.radians(), 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(b.radians(), 4 * kPi / 3, 1e-12);
  auto [c, d] = rotation_invariant(MobiusMap(0.0, 1.0, -1.0, 0.0));
  EXPECT_NEAR(c.radians(), kPi, 1e-12);
  EXPECT_NEAR(d.radians(), kPi, 1e-12);
}

TEST(RotationAngle, Errors) {
  try {
    rotation_angle(MobiusMap(2.0, 0.0, 0.0, 0.5), F(0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotElliptic);
  }
  try {
    rotation_angle(diag_rot(1.0), F(1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFixedPoint);
  }
}

TEST(RotationAngle, RandomEllipticProperties) {
  Rng r;
  for (int n = 0; n < 1000; ++n) {
    MobiusMap m = r.elliptic();
    auto fp = fixed_points(m);
    ASSERT_EQ(fp.size(), 2u);
    double x = rotation_angle(m, fp[0]).radians(), y = rotation_angle(m, fp[1]).radians();
    EXPECT_NEAR(x + y, 2 * kPi, 1e-10);
    EXPECT_NEAR(rotation_angle(m.inverse(), fp[0]).radians(), 2 * kPi - x, 1e-9);
    for (const auto& t : {rotation_invariant(m).first, rotation_invariant(m).second}) {
      double c = std::cos(t.radians() / 2);
      EXPECT_LT(std::abs(4 * c * c - m.trace_squared().real()), 1e-10);
    }
  }
}

TEST(RotationAngle, EqualTraceEllipticsAreConjugate) {
  Rng r;
  for (int n = 0; n < 200; ++n) {
    double t = r.u(0.1, 2 * kPi - 0.1);
    MobiusMap g1 = r.map(), g2 = r.map();
    MobiusMap m1 = g1 * diag_rot(t) * g1.inverse(), m2 = g2 * diag_rot(t) * g2.inverse();
    // Conjugator from fixed-point normalization, matching the rotation at p.
    auto f1 = fixed_points(m1), f2 = fixed_points(m2);
    double r1 = rotation_angle(m1, f1[0]).radians();
    int k = std::abs(rotation_angle(m2, f2[0]).radians() - r1) < 1e-6 ? 0 : 1;
    MobiusMap n1 = normalize_pair(f1[0], f1[1]), n2 = normalize_pair(f2[k], f2[1 - k]);
    MobiusMap h = n2.inverse() * n1;
    EXPECT_LT(psl_distance(h * m1 * h.inverse(), m2), 1e-8);
  }
}

TEST(NormalizeTriple, Examples) {
  MobiusMap id = normalize_triple(F(0.0), F(1.0), RiemannPoint::infinity());
  EXPECT_LT(psl_distance(id, MobiusMap()), 1e-12);
  MobiusMap inv = normalize_triple(RiemannPoint::infinity(), F(1.0), F(0.0));
  EXPECT_LT(psl_distance(inv, MobiusMap(0.0, 1.0, 1.0, 0.0)), 1e-12);
  MobiusMap m = normalize_triple(F(I), F(1.0), F(-I));
  EXPECT_LT(std::abs(m.det() - 1.0), 1e-12);
  EXPECT_LT(chordal_distance(apply(m, F(I)), F(0.0)), 1e-12);
  EXPECT_LT(chordal_distance(apply(m, F(1.0)), F(1.0)), 1e-12);
  EXPECT_LT(chordal_distance(apply(m, F(-I)), RiemannPoint::infinity()), 1e-12);
  EXPECT_THROW(normalize_triple(F(1.0), F(1.0), F(2.0)), Error);
}

TEST(NormalizeTriple, RandomTriples) {
  Rng r;
  for (int n = 0; n < 1000; ++n) {
    RiemannPoint p1 = F(r.c()), p2 = F(r.c()), p3 = F(r.c());
    MobiusMap m = normalize_triple(p1, p2, p3);
    EXPECT_LT(chordal_distance(apply(m, p1), F(0.0)), 1e-12);
    EXPECT_LT(chordal_distance(apply(m, p2), F(1.0)), 1e-12);
    EXPECT_LT(chordal_distance(apply(m, p3), RiemannPoint::infinity()), 1e-12);
  }
}

TEST(Apply, Examples) {
  EXPECT_TRUE(same_point(apply(MobiusMap(), F(3.0)), F(3.0)));
  EXPECT_TRUE(same_point(apply(MobiusMap(0.0, 1.0, -1.0, 0.0), F(0.0)), RiemannPoint::infinity()));
  EXPECT_TRUE(same_point(apply(MobiusMap(1.0, 1.0, 0.0, 1.0), F(1.0)), F(2.0)));
}

TEST(MobiusMap, LiftSignIgnored) {
  MobiusMap m(1.0, 2.0, 3.0, 7.0);
  MobiusMap neg(-m.a(), -m.b(), -m.c(), -m.d());
  EXPECT_TRUE(same_map(m, neg, 1e-12));
  EXPECT_NEAR(std::abs(m.trace_squared() - neg.trace_squared()), 0.0, 1e-12);
}
