#include "cp1graft/tolerance.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace cp1graft {
namespace {

double initial_eps() {
  if (const char* env = std::getenv("CP1GRAFT_EPS")) {
    try {
      double v = std::stod(env);
      if (v > 0.0 && v < 1e-1) return v;
    } catch (...) {
    }
  }
  return 1e-9;
}

std::atomic<double>& eps_slot() {
  static std::atomic<double> slot{initial_eps()};
  return slot;
}

}  // namespace

double eps() { return eps_slot().load(std::memory_order_relaxed); }

void set_eps(double value) { eps_slot().store(value, std::memory_order_relaxed); }

double geom_tol() { return 100.0 * eps(); }

ScopedEps::ScopedEps(double value) : saved_(eps()) { set_eps(value); }
ScopedEps::~ScopedEps() { set_eps(saved_); }

}  // namespace cp1graft
