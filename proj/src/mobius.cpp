#include "cp1graft/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

RiemannPoint::RiemannPoint(cplx z1, cplx z2) {
  double n1 = std::abs(z1), n2 = std::abs(z2);
  if (!std::isfinite(n1) || !std::isfinite(n2) || (n1 == 0.0 && n2 == 0.0)) {
    fail(ErrorCode::InvalidPoint, "homogeneous coordinates must be finite and not both zero");
  }
  if (n1 >= n2) {
    z2_ = z2 / z1;
    z1_ = 1.0;
  } else {
    z1_ = z1 / z2;
    z2_ = 1.0;
  }
}

cplx RiemannPoint::affine() const {
  if (z2_ == cplx(0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
  return z1_ / z2_;
}

double chordal_distance(const RiemannPoint& p, const RiemannPoint& q) {
  double np = std::hypot(std::abs(p.z1()), std::abs(p.z2()));
  double nq = std::hypot(std::abs(q.z1()), std::abs(q.z2()));
  return std::abs(p.z1() * q.z2() - p.z2() * q.z1()) / (np * nq);
}

bool same_point(const RiemannPoint& p, const RiemannPoint& q, double tol) {
  return chordal_distance(p, q) < tol;
}

bool same_point(const RiemannPoint& p, const RiemannPoint& q) { return same_point(p, q, eps()); }

MobiusMap::MobiusMap(cplx a, cplx b, cplx c, cplx d) {
  cplx det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!std::isfinite(scale) || scale == 0.0 || std::abs(det) <= eps() * scale * scale) {
    fail(ErrorCode::SingularMatrix, "matrix is singular");
  }
  cplx s = std::sqrt(det);
  m_ = {a / s, b / s, c / s, d / s};
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(Raw{}, m_[3], -m_[1], -m_[2], m_[0]); }

MobiusMap MobiusMap::conjugate() const {
  return MobiusMap(Raw{}, std::conj(m_[0]), std::conj(m_[1]), std::conj(m_[2]), std::conj(m_[3]));
}

MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
  // Renormalized so det stays 1 across long products.
  return MobiusMap(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                   x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

double psl_distance(const MobiusMap& x, const MobiusMap& y) {
  auto frob = [](cplx p, cplx q, cplx r, cplx s) {
    return std::sqrt(std::norm(p) + std::norm(q) + std::norm(r) + std::norm(s));
  };
  double minus = frob(x.a() - y.a(), x.b() - y.b(), x.c() - y.c(), x.d() - y.d());
  double plus = frob(x.a() + y.a(), x.b() + y.b(), x.c() + y.c(), x.d() + y.d());
  return std::min(minus, plus);
}

bool same_map(const MobiusMap& x, const MobiusMap& y, double tol) { return psl_distance(x, y) < tol; }

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::Identity: return "identity";
    case MapClass::Parabolic: return "parabolic";
    case MapClass::Elliptic: return "elliptic";
    case MapClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

MapClass classify(const MobiusMap& m) {
  const double e = eps();
  if (psl_distance(m, MobiusMap::identity()) < e) return MapClass::Identity;
  cplx t2 = m.trace_squared();
  if (std::abs(t2 - 4.0) < e) return MapClass::Parabolic;
  if (std::abs(t2.imag()) < e && t2.real() < 4.0 - e) return MapClass::Elliptic;
  return MapClass::Loxodromic;
}

RiemannPoint apply(const MobiusMap& m, const RiemannPoint& p) {
  return RiemannPoint(m.a() * p.z1() + m.b() * p.z2(), m.c() * p.z1() + m.d() * p.z2());
}

namespace {

// Eigenvector of m for eigenvalue lambda; the better-conditioned of the two
// candidate columns of the adjugate of (m - lambda).
RiemannPoint eigenvector(const MobiusMap& m, cplx lambda) {
  cplx u1 = m.b(), u2 = lambda - m.a();
  cplx w1 = lambda - m.d(), w2 = m.c();
  double nu = std::norm(u1) + std::norm(u2);
  double nw = std::norm(w1) + std::norm(w2);
  return nu >= nw ? RiemannPoint(u1, u2) : RiemannPoint(w1, w2);
}

}  // namespace

std::vector<RiemannPoint> fixed_points(const MobiusMap& m) {
  MapClass cls = classify(m);
  if (cls == MapClass::Identity) fail(ErrorCode::IdentityInput, "identity fixes every point");
  cplx tr = m.trace();
  if (cls == MapClass::Parabolic) return {eigenvector(m, tr / 2.0)};
  cplx disc = std::sqrt(tr * tr - 4.0);
  // Pick the larger-modulus root first to avoid cancellation.
  cplx l1 = (std::abs(tr + disc) >= std::abs(tr - disc)) ? (tr + disc) / 2.0 : (tr - disc) / 2.0;
  cplx l2 = 1.0 / l1;
  return {eigenvector(m, l1), eigenvector(m, l2)};
}

MobiusMap normalize_pair(const RiemannPoint& p, const RiemannPoint& q) {
  if (same_point(p, q)) fail(ErrorCode::CoincidentPoints, "normalize_pair needs distinct points");
  return MobiusMap(p.z2(), -p.z1(), q.z2(), -q.z1());
}

AngleValue rotation_angle(const MobiusMap& m, const RiemannPoint& p) {
  if (classify(m) != MapClass::Elliptic) fail(ErrorCode::NotElliptic, "rotation_angle needs an elliptic map");
  auto fps = fixed_points(m);
  double d0 = chordal_distance(fps[0], p), d1 = chordal_distance(fps[1], p);
  if (std::min(d0, d1) > geom_tol() && chordal_distance(apply(m, p), p) > geom_tol()) {
    fail(ErrorCode::NotFixedPoint, "point is not fixed by the map");
  }
  const RiemannPoint& other = d0 <= d1 ? fps[1] : fps[0];
  MobiusMap n = normalize_pair(p, other);
  MobiusMap diag = n * m * n.inverse();
  double theta = std::arg(diag.a() / diag.d());
  if (theta <= 0.0) theta += 2.0 * kPi;
  return AngleValue::from_radians(theta);
}

std::pair<AngleValue, AngleValue> rotation_invariant(const MobiusMap& m) {
  if (classify(m) != MapClass::Elliptic) fail(ErrorCode::NotElliptic, "rotation_invariant needs an elliptic map");
  double t = std::clamp(m.trace_squared().real(), 0.0, 4.0);
  // cos(theta/2) = sqrt(t)/2, sin(theta/2) = sqrt(4 - t)/2.
  double theta = 2.0 * std::atan2(std::sqrt(4.0 - t), std::sqrt(t));
  return {AngleValue::from_radians(theta), AngleValue::from_radians(2.0 * kPi - theta)};
}

MobiusMap normalize_triple(const RiemannPoint& p1, const RiemannPoint& p2, const RiemannPoint& p3) {
  if (same_point(p1, p2) || same_point(p2, p3) || same_point(p1, p3)) {
    fail(ErrorCode::CoincidentPoints, "normalize_triple needs pairwise distinct points");
  }
  // Row r_i annihilates p_i; the scalings make p2 land on [1:1].
  auto bracket = [](const RiemannPoint& x, const RiemannPoint& y) { return x.z2() * y.z1() - x.z1() * y.z2(); };
  cplx alpha = bracket(p3, p2);
  cplx beta = bracket(p1, p2);
  return MobiusMap(alpha * p1.z2(), -alpha * p1.z1(), beta * p3.z2(), -beta * p3.z1());
}

}  // namespace cp1graft
