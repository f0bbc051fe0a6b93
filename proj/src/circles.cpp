#include "cp1graft/circles.hpp"

#include <algorithm>
#include <cmath>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

namespace {

const cplx I1(0.0, 1.0);

double form_scale(const Circle& c) { return std::abs(c.A()) + 2.0 * std::abs(c.B()) + std::abs(c.C()); }

// Unitary U with U* H U = diag(l1, l2), l1 > 0 > l2.
struct HermitianFrame {
  double l1, l2;
  cplx u11, u12, u21, u22;  // columns (u11, u21), (u12, u22)
};

HermitianFrame frame_of(const Circle& c) {
  double A = c.A(), C = c.C();
  cplx B = c.B();
  double mean = 0.5 * (A + C);
  double rad = std::sqrt(0.25 * (A - C) * (A - C) + std::norm(B));
  HermitianFrame f;
  f.l1 = mean + rad;
  f.l2 = mean - rad;
  // Eigenvector for l1 from whichever adjugate column is larger.
  cplx e1 = B, e2 = f.l1 - A;
  cplx g1 = f.l1 - C, g2 = std::conj(B);
  if (std::norm(g1) + std::norm(g2) > std::norm(e1) + std::norm(e2)) {
    e1 = g1;
    e2 = g2;
  }
  double n = std::sqrt(std::norm(e1) + std::norm(e2));
  if (n == 0.0) {
    // H is diagonal with l1 = A (A > C) and B = 0.
    e1 = 1.0;
    e2 = 0.0;
    n = 1.0;
    if (C > A) {
      e1 = 0.0;
      e2 = 1.0;
    }
  }
  e1 /= n;
  e2 /= n;
  f.u11 = e1;
  f.u21 = e2;
  f.u12 = -std::conj(e2);
  f.u22 = std::conj(e1);
  return f;
}

// Entries of U* H U for a circle H and a frame U.
struct Hermitian2 {
  double k11, k22;
  cplx k12;
};

Hermitian2 in_frame(const HermitianFrame& f, const Circle& c) {
  // K = U* H U with columns u = (u11, u21), w = (u12, u22).
  auto apply_h = [&](cplx x, cplx y) {
    return std::pair<cplx, cplx>{c.A() * x + c.B() * y, std::conj(c.B()) * x + c.C() * y};
  };
  auto [hu1, hu2] = apply_h(f.u11, f.u21);
  auto [hw1, hw2] = apply_h(f.u12, f.u22);
  Hermitian2 k;
  k.k11 = (std::conj(f.u11) * hu1 + std::conj(f.u21) * hu2).real();
  k.k22 = (std::conj(f.u12) * hw1 + std::conj(f.u22) * hw2).real();
  k.k12 = std::conj(f.u11) * hw1 + std::conj(f.u21) * hw2;
  return k;
}

RiemannPoint frame_point(const HermitianFrame& f, double s, double t) {
  cplx w1 = s * std::polar(1.0, t);
  return RiemannPoint(f.u11 * w1 + f.u12, f.u21 * w1 + f.u22);
}

double frame_radius(const HermitianFrame& f) { return std::sqrt(-f.l2 / f.l1); }

}  // namespace

Circle::Circle(double A, cplx B, double C) {
  double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
  double k = std::norm(B) - A * C;
  if (!std::isfinite(scale) || scale == 0.0 || !(k > 1e-14 * scale * scale)) {
    fail(ErrorCode::InvalidCircle, "Hermitian form has no real zero set");
  }
  double s = std::sqrt(k);
  A_ = A / s;
  B_ = B / s;
  C_ = C / s;
}

Circle Circle::unit() { return Circle(1.0, 0.0, -1.0); }
Circle Circle::real_axis() { return Circle(0.0, -I1, 0.0); }

Circle Circle::euclidean(cplx center, double radius) {
  return Circle(1.0, -center, std::norm(center) - radius * radius);
}

Circle Circle::line(cplx p, cplx d) {
  if (std::abs(d) == 0.0) fail(ErrorCode::InvalidCircle, "line direction must be nonzero");
  cplx B = -I1 * d / std::abs(d);
  return Circle(0.0, B, -2.0 * (B * std::conj(p)).real());
}

double Circle::form(const RiemannPoint& p) const {
  cplx z1 = p.z1(), z2 = p.z2();
  return A_ * std::norm(z1) + 2.0 * (B_ * std::conj(z1) * z2).real() + C_ * std::norm(z2);
}

double inversive_product(const Circle& c1, const Circle& c2) {
  return (c1.B() * std::conj(c2.B())).real() - 0.5 * (c1.A() * c2.C() + c2.A() * c1.C());
}

double oriented_form_distance(const Circle& c1, const Circle& c2) {
  return std::sqrt((c1.A() - c2.A()) * (c1.A() - c2.A()) + 2.0 * std::norm(c1.B() - c2.B()) +
                   (c1.C() - c2.C()) * (c1.C() - c2.C()));
}

double form_distance(const Circle& c1, const Circle& c2) {
  return std::min(oriented_form_distance(c1, c2), oriented_form_distance(c1, c2.reversed()));
}

Circle transform_circle(const MobiusMap& m, const Circle& c) {
  MobiusMap n = m.inverse();
  // H' = N* H N.
  cplx h00 = c.A(), h01 = c.B(), h10 = std::conj(c.B()), h11 = c.C();
  cplx p00 = h00 * n.a() + h01 * n.c();
  cplx p01 = h00 * n.b() + h01 * n.d();
  cplx p10 = h10 * n.a() + h11 * n.c();
  cplx p11 = h10 * n.b() + h11 * n.d();
  cplx q00 = std::conj(n.a()) * p00 + std::conj(n.c()) * p10;
  cplx q01 = std::conj(n.a()) * p01 + std::conj(n.c()) * p11;
  cplx q11 = std::conj(n.b()) * p01 + std::conj(n.d()) * p11;
  return Circle(q00.real(), q01, q11.real());
}

Circle circle_through(const RiemannPoint& p1, const RiemannPoint& p2, const RiemannPoint& p3) {
  MobiusMap n = normalize_triple(p1, p2, p3);
  return transform_circle(n.inverse(), Circle::real_axis());
}

RiemannPoint apply(const AntiMobiusMap& j, const RiemannPoint& p) {
  return apply(j.linear, RiemannPoint(std::conj(p.z1()), std::conj(p.z2())));
}

MobiusMap compose(const AntiMobiusMap& j2, const AntiMobiusMap& j1) { return j2.linear * j1.linear.conjugate(); }

AntiMobiusMap reflect(const Circle& c) {
  return {MobiusMap(-I1 * c.B(), -I1 * c.C(), I1 * c.A(), I1 * std::conj(c.B()))};
}

std::vector<RiemannPoint> intersect(const Circle& c1, const Circle& c2) {
  if (form_distance(c1, c2) < eps()) fail(ErrorCode::EqualCircles, "intersect needs distinct circles");
  HermitianFrame f = frame_of(c1);
  Hermitian2 k = in_frame(f, c2);
  double s = frame_radius(f);
  double num = -(s * s * k.k11 + k.k22);
  double den = 2.0 * s * std::abs(k.k12);
  if (den <= eps() * (std::abs(num) + 1.0)) return {};
  double r = num / den;
  double phi = std::arg(k.k12);
  double gap = 1.0 - std::abs(r);
  if (gap < -eps()) return {};
  if (gap <= eps()) return {frame_point(f, s, r > 0 ? phi : phi + kPi)};
  double delta = std::acos(r);
  return {frame_point(f, s, phi + delta), frame_point(f, s, phi - delta)};
}

bool on_circle(const Circle& c, const RiemannPoint& p, double tol) {
  return std::abs(c.form(p)) <= tol * form_scale(c);
}

int side_of(const Circle& c, const RiemannPoint& p) {
  double v = c.form(p);
  if (std::abs(v) <= eps() * form_scale(c)) return 0;
  return v > 0 ? 1 : -1;
}

AngleValue angle_at(const Circle& c1, const Circle& c2, const RiemannPoint& x) {
  if (!on_circle(c1, x, geom_tol()) || !on_circle(c2, x, geom_tol())) {
    fail(ErrorCode::PointNotOnCircles, "angle_at needs a common point of both circles");
  }
  auto pts = intersect(c1, c2);
  if (pts.size() < 2) fail(ErrorCode::TangentCircles, "angle_at needs transversal circles");
  const RiemannPoint& y =
      chordal_distance(pts[0], x) <= chordal_distance(pts[1], x) ? pts[1] : pts[0];
  MobiusMap n = normalize_pair(x, y);
  // Both images are lines through 0 with direction i*B.
  cplx b1 = transform_circle(n, c1).B();
  cplx b2 = transform_circle(n, c2).B();
  double phi = std::arg(b2 / b1);
  if (phi <= 0.0) phi += kPi;
  if (phi >= kPi) phi -= kPi;
  return AngleValue::from_radians(phi);
}

RiemannPoint point_on(const Circle& c, double t) {
  HermitianFrame f = frame_of(c);
  return frame_point(f, frame_radius(f), t);
}

}  // namespace cp1graft
