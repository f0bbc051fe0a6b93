#pragma once

#include <vector>

#include "cp1graft/angle.hpp"
#include "cp1graft/mobius.hpp"

namespace cp1graft {

// The circle {v : v* H v = 0} for H = [[A, B], [conj B, C]], normalized to
// |B|^2 - AC = 1. The sign of H is the orientation: the interior is
// {v* H v < 0}. Lines are the circles through infinity (A = 0).
class Circle {
 public:
  // Throws InvalidCircle unless |B|^2 - AC > 0.
  Circle(double A, cplx B, double C);

  double A() const { return A_; }
  cplx B() const { return B_; }
  double C() const { return C_; }

  // The unit circle, interior the unit disk.
  static Circle unit();
  // The extended real line, interior the upper half plane.
  static Circle real_axis();
  // |z - center| = radius, interior the disk.
  static Circle euclidean(cplx center, double radius);
  // The line through p with direction d, interior on the left of d.
  static Circle line(cplx p, cplx d);

  Circle reversed() const { return Circle(-A_, -B_, -C_); }
  // v* H v on the stored lift of p.
  double form(const RiemannPoint& p) const;

 private:
  double A_, C_;
  cplx B_;
};

// <H1, H2> = Re(B1 conj B2) - (A1 C2 + A2 C1) / 2. For intersecting circles
// this is the cosine of an intersection angle; +-1 means tangent, |.| > 1
// disjoint, 0 orthogonal.
double inversive_product(const Circle& c1, const Circle& c2);

// Frobenius distance between the Hermitian forms, minimized over the global
// sign, so it compares the underlying point sets.
double form_distance(const Circle& c1, const Circle& c2);
// Frobenius distance with orientations compared.
double oriented_form_distance(const Circle& c1, const Circle& c2);

// Interior on the left of p1 -> p2 -> p3. Throws CoincidentPoints.
Circle circle_through(const RiemannPoint& p1, const RiemannPoint& p2, const RiemannPoint& p3);

// z -> L conj(z) for a det-1 matrix L.
struct AntiMobiusMap {
  MobiusMap linear;
};

RiemannPoint apply(const AntiMobiusMap& j, const RiemannPoint& p);
// J2 o J1 as a Mobius map.
MobiusMap compose(const AntiMobiusMap& j2, const AntiMobiusMap& j1);

// Reflection in c. Fixes c pointwise; an involution.
AntiMobiusMap reflect(const Circle& c);

// 0, 1 or 2 points. Throws EqualCircles.
std::vector<RiemannPoint> intersect(const Circle& c1, const Circle& c2);

// Anticlockwise angle in (0, pi) from c1 to c2 at the intersection point x.
// Throws PointNotOnCircles, TangentCircles.
AngleValue angle_at(const Circle& c1, const Circle& c2, const RiemannPoint& x);

// Sign of the form at p, 0 when |form| < eps().
int side_of(const Circle& c, const RiemannPoint& p);
// Whether p lies on c within tol (relative to the scale of H).
bool on_circle(const Circle& c, const RiemannPoint& p, double tol);

// H -> M^{-*} H M^{-1}, renormalized; p on c iff M(p) on the image.
Circle transform_circle(const MobiusMap& m, const Circle& c);

// The point of c with parameter t in [0, 2pi); a full turn traverses c
// once with the interior on the left.
RiemannPoint point_on(const Circle& c, double t);

}  // namespace cp1graft
