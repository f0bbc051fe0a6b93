#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "cp1graft/angle.hpp"

namespace cp1graft {

using cplx = std::complex<double>;

// A point of CP^1 in homogeneous coordinates [z1 : z2]. The stored lift has
// its larger-modulus coordinate scaled to exactly 1.
class RiemannPoint {
 public:
  RiemannPoint() : z1_(0.0), z2_(1.0) {}
  // Throws InvalidPoint if both coordinates vanish or are not finite.
  RiemannPoint(cplx z1, cplx z2);

  static RiemannPoint finite(cplx z) { return RiemannPoint(z, 1.0); }
  static RiemannPoint infinity() { return RiemannPoint(1.0, 0.0); }

  cplx z1() const { return z1_; }
  cplx z2() const { return z2_; }
  bool is_infinity(double tol) const { return std::abs(z2_) <= tol; }
  // z1/z2; infinite when z2 == 0.
  cplx affine() const;

 private:
  cplx z1_, z2_;
};

// |z1 w2 - z2 w1| / (|z| |w|): the sine of the spherical half-angle between
// the points, in [0, 1].
double chordal_distance(const RiemannPoint& p, const RiemannPoint& q);
// Projective equality: chordal distance below tol.
bool same_point(const RiemannPoint& p, const RiemannPoint& q, double tol);
bool same_point(const RiemannPoint& p, const RiemannPoint& q);

// 2x2 complex matrix with determinant normalized to 1. Equality and the
// quantities tr^2, |tr| are taken modulo the sign of the lift.
class MobiusMap {
 public:
  MobiusMap() : m_{1.0, 0.0, 0.0, 1.0} {}
  // Scales by a square root of the determinant. Throws SingularMatrix when
  // |det| is below eps relative to the entry scale.
  MobiusMap(cplx a, cplx b, cplx c, cplx d);

  static MobiusMap identity() { return MobiusMap(); }

  cplx a() const { return m_[0]; }
  cplx b() const { return m_[1]; }
  cplx c() const { return m_[2]; }
  cplx d() const { return m_[3]; }
  cplx trace() const { return m_[0] + m_[3]; }
  cplx trace_squared() const { return trace() * trace(); }
  cplx det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  MobiusMap inverse() const;
  // Entrywise conjugate; the linear part of z -> conj(M(conj z)).
  MobiusMap conjugate() const;
  friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y);

 private:
  struct Raw {};
  MobiusMap(Raw, cplx a, cplx b, cplx c, cplx d) : m_{a, b, c, d} {}
  std::array<cplx, 4> m_;
};

// min over the lift sign of the Frobenius norm of x - (+-y).
double psl_distance(const MobiusMap& x, const MobiusMap& y);
bool same_map(const MobiusMap& x, const MobiusMap& y, double tol);

enum class MapClass { Identity, Parabolic, Elliptic, Loxodromic };
const char* to_string(MapClass c);

MapClass classify(const MobiusMap& m);
RiemannPoint apply(const MobiusMap& m, const RiemannPoint& p);

// Two points for elliptic/loxodromic maps, one for parabolic ones.
// Throws IdentityInput.
std::vector<RiemannPoint> fixed_points(const MobiusMap& m);

// Anticlockwise rotation angle at the fixed point p, in (0, 2pi).
// Throws NotElliptic, NotFixedPoint.
AngleValue rotation_angle(const MobiusMap& m, const RiemannPoint& p);

// {theta, 2pi - theta} with theta in (0, pi]. Throws NotElliptic.
std::pair<AngleValue, AngleValue> rotation_invariant(const MobiusMap& m);

// The map sending (p1, p2, p3) to (0, 1, inf). Throws CoincidentPoints.
MobiusMap normalize_triple(const RiemannPoint& p1, const RiemannPoint& p2, const RiemannPoint& p3);

// A map sending p to 0 and q to inf. Throws CoincidentPoints.
MobiusMap normalize_pair(const RiemannPoint& p, const RiemannPoint& q);

}  // namespace cp1graft
