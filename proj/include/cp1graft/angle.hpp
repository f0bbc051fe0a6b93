#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cp1graft {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kPi = 3.14159265358979323846;

// An angle that is either an exact rational multiple of pi or a float in
// radians. Arithmetic stays exact only while every operand is exact; the
// exact-to-float direction is the only implicit conversion.
class AngleValue {
 public:
  AngleValue() : exact_(Rational(0)), radians_(0.0) {}

  static AngleValue pi_times(Rational q);
  static AngleValue pi_fraction(std::int64_t num, std::int64_t den = 1);
  static AngleValue from_radians(double r);

  bool is_exact() const { return exact_.has_value(); }
  // Throws ExactnessRequired for float angles.
  const Rational& pi_multiple() const;
  double radians() const { return radians_; }
  double pi_units() const;
  AngleValue to_float() const { return from_radians(radians_); }

  AngleValue operator-() const;
  AngleValue& operator+=(const AngleValue& o);
  AngleValue& operator-=(const AngleValue& o);
  friend AngleValue operator+(AngleValue x, const AngleValue& y) { return x += y; }
  friend AngleValue operator-(AngleValue x, const AngleValue& y) { return x -= y; }
  friend AngleValue operator*(std::int64_t k, const AngleValue& x);
  // Exact halving / scaling by a rational; float angles scale in radians.
  AngleValue scaled(const Rational& q) const;

  // "3/2pi", "pi", "-pi/4", "0" for exact; "%.17g" radians otherwise.
  std::string str() const;

 private:
  std::optional<Rational> exact_;
  double radians_;
};

// Result of a sign decision. `banded` is set when a float quantity was
// resolved to zero by the eps*pi band rather than by exact arithmetic.
struct SignDecision {
  int sign = 0;
  bool banded = false;
};

// Sign of x; float values within eps()*pi of zero decide to 0.
SignDecision decide_sign(const AngleValue& x);
// Sign of x - y.
SignDecision compare(const AngleValue& x, const AngleValue& y);
bool same_angle(const AngleValue& x, const AngleValue& y);
// floor(x / pi). Exact for exact angles.
std::int64_t floor_pi(const AngleValue& x);

// ka*a + kb*b + kc*c + kpi*pi.
struct PiLinearForm {
  std::array<std::int64_t, 4> k{};  // (ka, kb, kc, kpi)
  AngleValue eval(const std::array<AngleValue, 3>& abc) const;
  bool operator==(const PiLinearForm&) const = default;
  std::string str() const;
};

// A real number that is either an exact rational or a float.
struct RealValue {
  std::optional<Rational> exact;
  double value = 0.0;
  static RealValue from_rational(Rational q);
  static RealValue from_double(double v);
  bool is_integer(double tol) const;
  std::string str() const;
};

// Angle literal grammar: [-]<int>pi, [-]<int>/<int>pi, [-]<int>pi/<int>,
// pi, pi/<int>, with a decimal in front of "pi" giving a float multiple of
// pi; a bare decimal ("1.5", "2e-1") is radians in float mode. Rational
// literals without "pi" other than 0 are ambiguous and rejected with ParseError.
AngleValue parse_angle(std::string_view text);

// Real literal grammar: [-]<int>, [-]<int>/<int> (exact), or a decimal float.
RealValue parse_real(std::string_view text);

std::string rational_str(const Rational& q);

}  // namespace cp1graft
