#pragma once

#include <array>
#include <vector>

#include "cp1graft/differentials.hpp"
#include "cp1graft/triangles.hpp"

namespace cp1graft {

// Row-major 2x2 complex matrix without the det normalization of MobiusMap.
struct Mat2 {
  cplx a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  cplx det() const { return a * d - b * c; }
  cplx trace() const { return a + d; }
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
};
// Frobenius distance from +-y, minimized over the sign.
double sign_free_distance(const Mat2& x, const Mat2& y);

// A straight segment or a circular arc z = center + radius e^{it},
// t from t0 to t1 (t1 < t0 runs clockwise).
struct PathPiece {
  enum class Kind { Segment, Arc } kind = Kind::Segment;
  cplx from = 0.0, to = 0.0;
  cplx center = 0.0;
  double radius = 0.0, t0 = 0.0, t1 = 0.0;

  cplx at(double s) const;          // s in [0, 1]
  cplx derivative(double s) const;  // dz/ds
  cplx start() const { return at(0.0); }
  cplx end() const { return at(1.0); }
};

struct LoopPath {
  std::vector<PathPiece> pieces;
  cplx basepoint = 0.5;
  // Winding numbers around 0 and 1.
  std::array<int, 2> winding{};
};

inline constexpr double kDefaultClearance = 0.05;

// Throws InvalidPath unless the pieces chain, the loop closes at the
// basepoint and every piece stays at least `clearance` from 0 and 1.
void validate_path(const LoopPath& loop, double clearance = kDefaultClearance);

// Anticlockwise circle of the given radius around 0 or 1, reached from the
// basepoint 1/2 by a radial segment.
LoopPath puncture_loop(Puncture around, double radius = 0.25);
// Anticlockwise circle |z| = radius enclosing both finite punctures.
LoopPath big_loop(double radius = 10.0);

// Y(end) for Y(basepoint) = I, where Y has rows (u, u') over two
// solutions of u'' + q u / 2 = 0. Throws IntegrationFailure, InvalidPath.
struct Transport {
  Mat2 m;
  double wronskian_drift = 0.0;  // max |det Y - 1| over the piece ends
  long steps = 0;
};
Transport integrate_monodromy(const DifferentialParams& p, const LoopPath& loop, double tol = 1e-9);

struct MonodromyResult {
  // M_0, M_1 from the small loops; M_inf the inverse of the big loop, so
  // M_0 M_1 M_inf = +-I.
  std::array<Mat2, 3> m;
  std::array<cplx, 3> trace;
  std::array<cplx, 3> trace_squared;
  double product_residual = 0.0;
  double wronskian_drift = 0.0;
};
MonodromyResult peripheral_traces(const DifferentialParams& p, double tol = 1e-9);

// 4 cos^2(pi theta).
double predicted_trace_squared(double theta);

struct CrossCheckReport {
  std::array<double, 3> theta{};
  std::array<double, 3> ode_trace_squared{};
  std::array<double, 3> reflection_trace_squared{};
  std::array<double, 3> residual{};
  double max_residual() const;
  MonodromyResult monodromy;
};
// theta = (a, b, c) / pi against tr^2 of the reflection holonomy.
CrossCheckReport cross_check_atomic(const RealizedImmersion& r, double tol = 1e-9);

}  // namespace cp1graft
