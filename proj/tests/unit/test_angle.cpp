#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "cp1graft/angle.hpp"
#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

using namespace cp1graft;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(AngleValue, ExactArithmeticStaysExact) {
  AngleValue a = AngleValue::pi_fraction(1, 6) + AngleValue::pi_fraction(1, 3) + AngleValue::pi_fraction(1, 2);
  ASSERT_TRUE(a.is_exact());
  EXPECT_EQ(a.pi_multiple(), Rational(1));
  EXPECT_EQ(decide_sign(a - AngleValue::pi_fraction(1)).sign, 0);
  EXPECT_FALSE(decide_sign(a - AngleValue::pi_fraction(1)).banded);
}

TEST(AngleValue, MixingWithFloatDropsExactness) {
  AngleValue a = AngleValue::pi_fraction(1, 2) + AngleValue::from_radians(0.1);
  EXPECT_FALSE(a.is_exact());
  EXPECT_NEAR(a.radians(), kPi / 2 + 0.1, 1e-15);
  EXPECT_EQ(code_of([&] { a.pi_multiple(); }), ErrorCode::ExactnessRequired);
}

TEST(AngleValue, FloatBandIsFlagged) {
  SignDecision d = decide_sign(AngleValue::from_radians(1e-12));
  EXPECT_EQ(d.sign, 0);
  EXPECT_TRUE(d.banded);
  EXPECT_EQ(decide_sign(AngleValue::from_radians(1e-6)).sign, 1);
}

TEST(AngleValue, ScopedEpsWidensTheBand) {
  {
    ScopedEps guard(1e-4);
    EXPECT_EQ(decide_sign(AngleValue::from_radians(1e-6)).sign, 0);
  }
  EXPECT_EQ(decide_sign(AngleValue::from_radians(1e-6)).sign, 1);
  EXPECT_DOUBLE_EQ(geom_tol(), 100.0 * eps());
}

TEST(AngleValue, FloorPi) {
  EXPECT_EQ(floor_pi(AngleValue::pi_fraction(9, 2)), 4);
  EXPECT_EQ(floor_pi(AngleValue::pi_fraction(-1, 2)), -1);
  EXPECT_EQ(floor_pi(AngleValue::pi_fraction(2)), 2);
  EXPECT_EQ(floor_pi(AngleValue::from_radians(4.0)), 1);
}

TEST(ParseAngle, Grammar) {
  EXPECT_EQ(parse_angle("3/2pi").pi_multiple(), Rational(3, 2));
  EXPECT_EQ(parse_angle("3pi/2").pi_multiple(), Rational(3, 2));
  EXPECT_EQ(parse_angle("pi").pi_multiple(), Rational(1));
  EXPECT_EQ(parse_angle("-pi/4").pi_multiple(), Rational(-1, 4));
  EXPECT_EQ(parse_angle("9pi").pi_multiple(), Rational(9));
  EXPECT_EQ(parse_angle("0").pi_multiple(), Rational(0));
  AngleValue f = parse_angle("1.5");
  EXPECT_FALSE(f.is_exact());
  EXPECT_DOUBLE_EQ(f.radians(), 1.5);
  AngleValue g = parse_angle("0.25pi");
  EXPECT_FALSE(g.is_exact());
  EXPECT_DOUBLE_EQ(g.radians(), 0.25 * kPi);
}

TEST(ParseAngle, RejectsAmbiguousAndJunk) {
  EXPECT_EQ(code_of([] { parse_angle("3"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_angle("3/2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_angle("pie"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_angle("1/0pi"); }), ErrorCode::ParseError);
}

TEST(ParseAngle, StrRoundTrips) {
  for (const char* s : {"3pi/2", "pi", "-pi/4", "0", "7pi/3"}) {
    AngleValue a = parse_angle(s);
    EXPECT_EQ(a.str(), s);
    EXPECT_EQ(parse_angle(a.str()).pi_multiple(), a.pi_multiple());
  }
  for (double r : {2.0, 0.125, -3.0, 1e-20}) {
    AngleValue a = AngleValue::from_radians(r);
    EXPECT_DOUBLE_EQ(parse_angle(a.str()).radians(), r) << a.str();
  }
}

TEST(ParseReal, ExactAndFloat) {
  RealValue a = parse_real("1/3");
  ASSERT_TRUE(a.exact.has_value());
  EXPECT_EQ(*a.exact, Rational(1, 3));
  EXPECT_FALSE(a.is_integer(1e-9));
  EXPECT_TRUE(parse_real("2").is_integer(1e-9));
  RealValue f = parse_real("0.5");
  EXPECT_FALSE(f.exact.has_value());
  EXPECT_DOUBLE_EQ(f.value, 0.5);
}

TEST(PiLinearForm, Evaluates) {
  PiLinearForm f{{-1, 0, 0, 2}};
  std::array<AngleValue, 3> x{AngleValue::pi_fraction(3, 2), AngleValue::pi_fraction(1, 3), AngleValue::pi_fraction(1, 4)};
  EXPECT_EQ(f.eval(x).pi_multiple(), Rational(1, 2));
  EXPECT_EQ(f.str(), "-a+2pi");
}
