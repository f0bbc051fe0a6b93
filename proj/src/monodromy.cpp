#include "cp1graft/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "cp1graft/errors.hpp"

namespace cp1graft {

Mat2 Mat2::inverse() const {
  cplx dt = det();
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

double sign_free_distance(const Mat2& x, const Mat2& y) {
  auto dist = [&](double s) {
    return std::sqrt(std::norm(x.a - s * y.a) + std::norm(x.b - s * y.b) + std::norm(x.c - s * y.c) +
                     std::norm(x.d - s * y.d));
  };
  return std::min(dist(1.0), dist(-1.0));
}

cplx PathPiece::at(double s) const {
  if (kind == Kind::Segment) return from + s * (to - from);
  return center + std::polar(radius, t0 + s * (t1 - t0));
}

cplx PathPiece::derivative(double s) const {
  if (kind == Kind::Segment) return to - from;
  return cplx(0.0, t1 - t0) * std::polar(radius, t0 + s * (t1 - t0));
}

namespace {

PathPiece segment(cplx from, cplx to) {
  PathPiece p;
  p.kind = PathPiece::Kind::Segment;
  p.from = from;
  p.to = to;
  return p;
}

PathPiece arc(cplx center, double radius, double t0, double t1) {
  PathPiece p;
  p.kind = PathPiece::Kind::Arc;
  p.center = center;
  p.radius = radius;
  p.t0 = t0;
  p.t1 = t1;
  return p;
}

// Lower bound for the distance from x to the piece.
double distance_to(const PathPiece& p, cplx x) {
  if (p.kind == PathPiece::Kind::Arc) return std::abs(std::abs(x - p.center) - p.radius);
  cplx d = p.to - p.from;
  double len2 = std::norm(d);
  double t = len2 > 0.0 ? std::clamp(((x - p.from) * std::conj(d)).real() / len2, 0.0, 1.0) : 0.0;
  return std::abs(p.from + t * d - x);
}

using State = std::array<double, 8>;  // (u1, u1', u2, u2'), real and imaginary parts

}  // namespace

void validate_path(const LoopPath& loop, double clearance) {
  if (loop.pieces.empty()) fail(ErrorCode::InvalidPath, "loop has no pieces");
  const double join = 1e-12;
  if (std::abs(loop.pieces.front().start() - loop.basepoint) > join) {
    fail(ErrorCode::InvalidPath, "loop does not start at the basepoint");
  }
  if (std::abs(loop.pieces.back().end() - loop.basepoint) > join) fail(ErrorCode::InvalidPath, "loop is not closed");
  for (std::size_t i = 0; i < loop.pieces.size(); ++i) {
    const PathPiece& p = loop.pieces[i];
    if (i + 1 < loop.pieces.size() && std::abs(p.end() - loop.pieces[i + 1].start()) > join) {
      fail(ErrorCode::InvalidPath, "pieces " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not join");
    }
    for (cplx puncture : {cplx(0.0), cplx(1.0)}) {
      if (distance_to(p, puncture) < clearance) {
        fail(ErrorCode::InvalidPath, "piece " + std::to_string(i) + " passes within the clearance of a puncture");
      }
    }
  }
}

LoopPath puncture_loop(Puncture around, double radius) {
  if (around == Puncture::Infinity) fail(ErrorCode::InvalidPath, "use big_loop for infinity");
  LoopPath l;
  l.basepoint = 0.5;
  if (around == Puncture::Zero) {
    cplx p(radius, 0.0);
    l.pieces = {segment(0.5, p), arc(0.0, radius, 0.0, 2.0 * kPi), segment(p, 0.5)};
    l.winding = {1, 0};
  } else {
    cplx p(1.0 - radius, 0.0);
    l.pieces = {segment(0.5, p), arc(1.0, radius, kPi, 3.0 * kPi), segment(p, 0.5)};
    l.winding = {0, 1};
  }
  return l;
}

LoopPath big_loop(double radius) {
  // Leaves the basepoint straight down so the connector avoids both punctures.
  LoopPath l;
  l.basepoint = 0.5;
  const double y = std::sqrt(radius * radius - 0.25);
  const cplx p(0.5, -y);
  const double t = std::arg(p);
  l.pieces = {segment(0.5, p), arc(0.0, radius, t, t + 2.0 * kPi), segment(p, 0.5)};
  l.winding = {1, 1};
  return l;
}

Transport integrate_monodromy(const DifferentialParams& p, const LoopPath& loop, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::IntegrationFailure, "tolerance must be positive");
  validate_path(loop);
  namespace ode = boost::numeric::odeint;
  State y{1, 0, 0, 0, 0, 0, 1, 0};
  Transport out;
  const long max_steps = 2000000;
  for (const PathPiece& piece : loop.pieces) {
    auto rhs = [&](const State& x, State& dx, double s) {
      const cplx z = piece.at(s), dz = piece.derivative(s);
      const cplx k = -0.5 * evaluate_q(p, z) * dz;
      for (int j = 0; j < 2; ++j) {
        const cplx u(x[4 * j], x[4 * j + 1]), du(x[4 * j + 2], x[4 * j + 3]);
        const cplx f = du * dz, g = k * u;
        dx[4 * j] = f.real();
        dx[4 * j + 1] = f.imag();
        dx[4 * j + 2] = g.real();
        dx[4 * j + 3] = g.imag();
      }
    };
    auto observer = [&](const State& x, double) {
      if (++out.steps > max_steps) fail(ErrorCode::IntegrationFailure, "step budget exhausted");
      for (double v : x) {
        if (!std::isfinite(v)) fail(ErrorCode::IntegrationFailure, "solution is not finite");
      }
    };
    // Local error control runs well below tol: per-step errors accumulate
    // over the loop and are amplified by the growth of the solutions.
    const double local = std::max(tol * 1e-3, 1e-14);
    auto stepper = ode::make_controlled(local, local, ode::runge_kutta_dopri5<State>());
    ode::integrate_adaptive(stepper, rhs, y, 0.0, 1.0, 1e-3, observer);
    Mat2 m{{y[0], y[1]}, {y[4], y[5]}, {y[2], y[3]}, {y[6], y[7]}};
    out.wronskian_drift = std::max(out.wronskian_drift, std::abs(m.det() - 1.0));
  }
  out.m = Mat2{{y[0], y[1]}, {y[4], y[5]}, {y[2], y[3]}, {y[6], y[7]}};
  return out;
}

MonodromyResult peripheral_traces(const DifferentialParams& p, double tol) {
  Transport t0 = integrate_monodromy(p, puncture_loop(Puncture::Zero), tol);
  Transport t1 = integrate_monodromy(p, puncture_loop(Puncture::One), tol);
  Transport tb = integrate_monodromy(p, big_loop(), tol);
  MonodromyResult r;
  // The big loop is homotopic to the loop around 1 followed by the loop
  // around 0, whose transport is T0 T1.
  r.m = {t0.m, t1.m, tb.m.inverse()};
  for (int i = 0; i < 3; ++i) {
    r.trace[i] = r.m[i].trace();
    r.trace_squared[i] = r.trace[i] * r.trace[i];
  }
  r.product_residual = sign_free_distance(r.m[0] * r.m[1] * r.m[2], Mat2{});
  r.wronskian_drift = std::max({t0.wronskian_drift, t1.wronskian_drift, tb.wronskian_drift});
  return r;
}

double predicted_trace_squared(double theta) {
  double c = std::cos(kPi * theta);
  return 4.0 * c * c;
}

double CrossCheckReport::max_residual() const { return *std::max_element(residual.begin(), residual.end()); }

CrossCheckReport cross_check_atomic(const RealizedImmersion& r, double tol) {
  CrossCheckReport rep;
  DifferentialParams p;
  for (int i = 0; i < 3; ++i) {
    rep.theta[i] = r.atomic.angles[i].radians() / kPi;
    p.theta[i] = rep.theta[i];
  }
  rep.monodromy = peripheral_traces(p, tol);
  FramedTriple h = holonomy_of(r);
  const std::array<const MobiusMap*, 3> gens{&h.triple.A, &h.triple.B, &h.triple.C};
  for (int i = 0; i < 3; ++i) {
    rep.ode_trace_squared[i] = rep.monodromy.trace_squared[i].real();
    rep.reflection_trace_squared[i] = gens[i]->trace_squared().real();
    rep.residual[i] = std::abs(rep.ode_trace_squared[i] - rep.reflection_trace_squared[i]) +
                      std::abs(rep.monodromy.trace_squared[i].imag());
  }
  return rep;
}

}  // namespace cp1graft
