#include "cp1graft/differentials.hpp"

#include <cmath>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

cplx evaluate_q(const DifferentialParams& p, cplx z) {
  if (std::abs(z) < eps() || std::abs(z - 1.0) < eps()) fail(ErrorCode::PoleEvaluation, "q has a pole at 0 and 1");
  const cplx s1 = p.theta[0] * p.theta[0], s2 = p.theta[1] * p.theta[1], s3 = p.theta[2] * p.theta[2];
  return (1.0 - s1) / (2.0 * z * z) + (1.0 - s2) / (2.0 * (z - 1.0) * (z - 1.0)) +
         (s1 + s2 - s3 - 1.0) / (2.0 * z * (z - 1.0));
}

cplx evaluate_q_at_infinity_chart(const DifferentialParams& p, cplx w) {
  if (std::abs(w) < eps()) fail(ErrorCode::PoleEvaluation, "q has a pole at infinity");
  cplx w2 = w * w;
  return evaluate_q(p, 1.0 / w) / (w2 * w2);
}

cplx leading_coefficient(const DifferentialParams& p, Puncture x) {
  cplx t = p.theta[static_cast<int>(x)];
  return (1.0 - t * t) / 2.0;
}

cplx contour_leading_coefficient(const DifferentialParams& p, Puncture x, int samples) {
  // For f with a double pole at c, the z^-2 coefficient is
  // (1 / 2 pi i) \oint f(z) (z - c) dz; on z = c + r e^{it} this becomes the
  // mean of f(z) (z - c)^2.
  const cplx center = x == Puncture::One ? 1.0 : 0.0;
  const double r = x == Puncture::Infinity ? 0.1 : 0.5;
  cplx sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    cplx u = std::polar(r, 2.0 * kPi * k / samples);
    cplx f = x == Puncture::Infinity ? evaluate_q_at_infinity_chart(p, u) : evaluate_q(p, center + u);
    sum += f * u * u;
  }
  return sum / static_cast<double>(samples);
}

std::pair<cplx, cplx> indicial_roots(cplx a) {
  cplx disc = std::sqrt(1.0 - 2.0 * a);
  cplx r1 = (1.0 - disc) / 2.0, r2 = (1.0 + disc) / 2.0;
  auto less = [](cplx u, cplx v) { return u.real() < v.real() || (u.real() == v.real() && u.imag() < v.imag()); };
  if (less(r2, r1)) std::swap(r1, r2);
  return {r1, r2};
}

const char* to_string(HolonomyType t) {
  switch (t) {
    case HolonomyType::Parabolic: return "parabolic";
    case HolonomyType::TrivialOrParabolic: return "trivial_or_parabolic";
    case HolonomyType::Elliptic: return "elliptic";
    case HolonomyType::Hyperbolic: return "hyperbolic";
    case HolonomyType::PurelyLoxodromic: return "purely_loxodromic";
  }
  return "?";
}

HolonomyType holonomy_type(cplx theta) {
  const double e = eps();
  const bool real = std::abs(theta.imag()) <= e;
  const bool integral_re = std::abs(theta.real() - std::round(theta.real())) <= e;
  if (real) {
    if (std::abs(theta.real()) <= e) return HolonomyType::Parabolic;
    return integral_re ? HolonomyType::TrivialOrParabolic : HolonomyType::Elliptic;
  }
  return integral_re ? HolonomyType::Hyperbolic : HolonomyType::PurelyLoxodromic;
}

AngleValue index_from_exponent(const RealValue& theta) {
  if (theta.is_integer(eps())) fail(ErrorCode::IntegerExponent, "exponent " + theta.str() + " is an integer");
  if (theta.exact) return AngleValue::pi_times(2 * abs(*theta.exact));
  return AngleValue::from_radians(2.0 * kPi * std::abs(theta.value));
}

RealValue exponent_from_index(const AngleValue& index) {
  RealValue t = index.is_exact() ? RealValue::from_rational(abs(index.pi_multiple()) / 2)
                                 : RealValue::from_double(std::abs(index.radians()) / (2.0 * kPi));
  if (t.is_integer(eps())) fail(ErrorCode::IntegerExponent, "index " + index.str() + " is a multiple of 2pi");
  return t;
}

DifferentialParams params_from_indices(const IndexTriple& indices) {
  validate_indices(indices);
  DifferentialParams p;
  for (int i = 0; i < 3; ++i) p.theta[i] = exponent_from_index(indices[i]).value;
  return p;
}

}  // namespace cp1graft
