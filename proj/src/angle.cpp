#include "cp1graft/angle.hpp"

#include <cmath>
#include <cstdio>
#include <regex>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

namespace {

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::int64_t floor_rational(const Rational& q) {
  std::int64_t n = q.numerator();
  std::int64_t d = q.denominator();  // d > 0
  std::int64_t f = n / d;
  if ((n % d != 0) && (n < 0)) --f;
  return f;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(ErrorCode::ParseError, "bad integer '" + s + "'");
    return v;
  } catch (const std::out_of_range&) {
    fail(ErrorCode::ParseError, "integer out of range '" + s + "'");
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "bad integer '" + s + "'");
  }
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  return Rational(num, den);
}

double parse_decimal(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !std::isfinite(v)) fail(ErrorCode::ParseError, "bad number '" + s + "'");
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad number '" + s + "'");
  }
}

std::string trim(std::string_view t) {
  std::size_t b = 0, e = t.size();
  while (b < e && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(t[e - 1]))) --e;
  return std::string(t.substr(b, e - b));
}

}  // namespace

AngleValue AngleValue::pi_times(Rational q) {
  AngleValue v;
  v.exact_ = q;
  v.radians_ = to_double(q) * kPi;
  return v;
}

AngleValue AngleValue::pi_fraction(std::int64_t num, std::int64_t den) {
  return pi_times(Rational(num, den));
}

AngleValue AngleValue::from_radians(double r) {
  AngleValue v;
  v.exact_.reset();
  v.radians_ = r;
  return v;
}

const Rational& AngleValue::pi_multiple() const {
  if (!exact_) fail(ErrorCode::ExactnessRequired, "angle " + str() + " is not an exact multiple of pi");
  return *exact_;
}

double AngleValue::pi_units() const { return exact_ ? to_double(*exact_) : radians_ / kPi; }

AngleValue AngleValue::operator-() const {
  return exact_ ? pi_times(-*exact_) : from_radians(-radians_);
}

AngleValue& AngleValue::operator+=(const AngleValue& o) {
  if (exact_ && o.exact_) {
    *this = pi_times(*exact_ + *o.exact_);
  } else {
    *this = from_radians(radians_ + o.radians_);
  }
  return *this;
}

AngleValue& AngleValue::operator-=(const AngleValue& o) { return *this += -o; }

AngleValue operator*(std::int64_t k, const AngleValue& x) {
  return x.exact_ ? AngleValue::pi_times(*x.exact_ * k)
                  : AngleValue::from_radians(static_cast<double>(k) * x.radians_);
}

AngleValue AngleValue::scaled(const Rational& q) const {
  return exact_ ? pi_times(*exact_ * q) : from_radians(radians_ * to_double(q));
}

std::string rational_str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string AngleValue::str() const {
  if (exact_) {
    const Rational& q = *exact_;
    if (q.numerator() == 0) return "0";
    std::string num;
    if (q.numerator() == 1) {
      num = "pi";
    } else if (q.numerator() == -1) {
      num = "-pi";
    } else {
      num = std::to_string(q.numerator()) + "pi";
    }
    if (q.denominator() == 1) return num;
    return num + "/" + std::to_string(q.denominator());
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", radians_);
  std::string out = buf;
  // Keep float output distinguishable from an (ambiguous) integer literal.
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

SignDecision decide_sign(const AngleValue& x) {
  if (x.is_exact()) {
    const Rational& q = x.pi_multiple();
    return {q.numerator() > 0 ? 1 : (q.numerator() < 0 ? -1 : 0), false};
  }
  double r = x.radians();
  if (std::abs(r) <= eps() * kPi) return {0, true};
  return {r > 0 ? 1 : -1, false};
}

SignDecision compare(const AngleValue& x, const AngleValue& y) { return decide_sign(x - y); }

bool same_angle(const AngleValue& x, const AngleValue& y) { return compare(x, y).sign == 0; }

std::int64_t floor_pi(const AngleValue& x) {
  if (x.is_exact()) return floor_rational(x.pi_multiple());
  return static_cast<std::int64_t>(std::floor(x.radians() / kPi));
}

AngleValue PiLinearForm::eval(const std::array<AngleValue, 3>& abc) const {
  AngleValue s = AngleValue::pi_fraction(k[3]);
  for (int i = 0; i < 3; ++i) s += k[i] * abc[i];
  return s;
}

std::string PiLinearForm::str() const {
  static const char* names[4] = {"a", "b", "c", "pi"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    std::int64_t c = k[i];
    if (c == 0) continue;
    if (c > 0 && !out.empty()) out += "+";
    if (c == -1) {
      out += "-";
    } else if (c != 1) {
      out += std::to_string(c);
    }
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

RealValue RealValue::from_rational(Rational q) { return {q, to_double(q)}; }
RealValue RealValue::from_double(double v) { return {std::nullopt, v}; }

bool RealValue::is_integer(double tol) const {
  if (exact) return exact->denominator() == 1;
  return std::abs(value - std::round(value)) <= tol;
}

std::string RealValue::str() const {
  if (exact) return rational_str(*exact);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

AngleValue parse_angle(std::string_view text) {
  const std::string s = trim(text);
  static const std::regex int_pi(R"((-?)(\d*)pi(?:/(\d+))?)");
  static const std::regex frac_pi(R"((-?)(\d+)/(\d+)pi)");
  static const std::regex dec_pi(R"((-?\d*\.\d+(?:[eE][-+]?\d+)?|-?\d+[eE][-+]?\d+)pi)");
  static const std::regex bare_rational(R"(-?\d+(?:/\d+)?)");
  static const std::regex decimal(R"(-?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)");
  std::smatch m;
  if (std::regex_match(s, m, int_pi)) {
    std::int64_t num = m[2].length() ? parse_int(m[2]) : 1;
    std::int64_t den = m[3].matched ? parse_int(m[3]) : 1;
    if (m[1].length()) num = -num;
    return AngleValue::pi_times(make_rational(num, den));
  }
  if (std::regex_match(s, m, frac_pi)) {
    std::int64_t num = parse_int(m[2]);
    if (m[1].length()) num = -num;
    return AngleValue::pi_times(make_rational(num, parse_int(m[3])));
  }
  if (std::regex_match(s, m, dec_pi)) {
    return AngleValue::from_radians(parse_decimal(m[1]) * kPi);
  }
  if (s == "0" || s == "-0") return AngleValue::pi_fraction(0);
  if (std::regex_match(s, bare_rational)) {
    fail(ErrorCode::ParseError,
         "ambiguous angle literal '" + s + "': write a multiple of pi or a decimal in radians");
  }
  if (std::regex_match(s, decimal)) return AngleValue::from_radians(parse_decimal(s));
  fail(ErrorCode::ParseError, "unrecognized angle literal '" + s + "'");
}

RealValue parse_real(std::string_view text) {
  const std::string s = trim(text);
  static const std::regex rational(R"((-?\d+)(?:/(\d+))?)");
  static const std::regex decimal(R"(-?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)");
  std::smatch m;
  if (std::regex_match(s, m, rational)) {
    std::int64_t num = parse_int(m[1]);
    std::int64_t den = m[2].matched ? parse_int(m[2]) : 1;
    return RealValue::from_rational(make_rational(num, den));
  }
  if (std::regex_match(s, decimal)) return RealValue::from_double(parse_decimal(s));
  fail(ErrorCode::ParseError, "unrecognized real literal '" + s + "'");
}

}  // namespace cp1graft
