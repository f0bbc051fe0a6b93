#pragma once

#include <array>
#include <complex>
#include <utility>

#include "cp1graft/grafting.hpp"
#include "cp1graft/mobius.hpp"

namespace cp1graft {

// Reduced exponents (theta1, theta2, theta3) at 0, 1 and infinity of
//   q(z) = (1 - t1^2) / (2 z^2) + (1 - t2^2) / (2 (z-1)^2)
//        + (t1^2 + t2^2 - t3^2 - 1) / (2 z (z-1)).
struct DifferentialParams {
  std::array<cplx, 3> theta{};
};

enum class Puncture { Zero = 0, One = 1, Infinity = 2 };

// Throws PoleEvaluation at z = 0 or z = 1.
cplx evaluate_q(const DifferentialParams& p, cplx z);

// The chart at infinity: q(1/w) / w^4. Throws PoleEvaluation at w = 0.
cplx evaluate_q_at_infinity_chart(const DifferentialParams& p, cplx w);

// (1 - theta^2) / 2 in closed form.
cplx leading_coefficient(const DifferentialParams& p, Puncture x);

// Coefficient of the double pole extracted by a trapezoid-rule contour
// integral: radius 1/2 around 0 and 1, radius 1/10 around w = 0 in the
// chart at infinity, `samples` nodes.
cplx contour_leading_coefficient(const DifferentialParams& p, Puncture x, int samples = 1024);

// Roots of r (r - 1) + a / 2 = 0, ordered by real part then imaginary part.
std::pair<cplx, cplx> indicial_roots(cplx a);

enum class HolonomyType { Parabolic, TrivialOrParabolic, Elliptic, Hyperbolic, PurelyLoxodromic };
const char* to_string(HolonomyType t);
// Integrality decided within eps().
HolonomyType holonomy_type(cplx theta);

// 2 pi |theta|. Throws IntegerExponent for integer theta.
AngleValue index_from_exponent(const RealValue& theta);
// index / (2 pi) >= 0. Throws IntegerExponent when that is an integer.
RealValue exponent_from_index(const AngleValue& index);

// theta_i = I_i / (2 pi). Throws InvalidIndices.
DifferentialParams params_from_indices(const IndexTriple& indices);

}  // namespace cp1graft
