#pragma once

namespace cp1graft {

// Global classification tolerance. Defaults to 1e-9; the CP1GRAFT_EPS
// environment variable is read on first use. Safe to read concurrently.
double eps();
void set_eps(double value);

// Tolerance for membership tests on computed points (on-circle, fixed-point,
// common-point detection). Always 100 * eps().
double geom_tol();

// Restores eps() on scope exit.
class ScopedEps {
 public:
  explicit ScopedEps(double value);
  ~ScopedEps();
  ScopedEps(const ScopedEps&) = delete;
  ScopedEps& operator=(const ScopedEps&) = delete;

 private:
  double saved_;
};

}  // namespace cp1graft
