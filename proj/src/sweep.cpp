#include "cp1graft/sweep.hpp"

#include <cmath>

namespace cp1graft {

namespace {

// |x - y| on the circle R / 2pi.
double angular_gap(double x, double y) {
  double d = std::remainder(x - y, 2.0 * kPi);
  return std::abs(d);
}

}  // namespace

std::vector<SweepOutcome<AtomicImmersion>> classify_batch(const std::vector<std::array<AngleValue, 3>>& angles,
                                                          Execution mode) {
  return sweep_map<AtomicImmersion>(angles.size(), [&](std::size_t i) { return atomic_classify(angles[i]); }, mode);
}

std::vector<SweepOutcome<Decomposition>> decompose_batch(const std::vector<IndexTriple>& indices, Execution mode) {
  return sweep_map<Decomposition>(indices.size(), [&](std::size_t i) { return decompose(indices[i]); }, mode);
}

std::vector<SweepOutcome<double>> trace_identity_batch(const std::vector<MobiusMap>& maps, Execution mode) {
  return sweep_map<double>(
      maps.size(),
      [&](std::size_t i) {
        auto [t1, t2] = rotation_invariant(maps[i]);
        const double tr2 = maps[i].trace_squared().real();
        double worst = 0.0;
        for (double t : {t1.radians(), t2.radians()}) {
          double c = std::cos(t / 2.0);
          worst = std::max(worst, std::abs(4.0 * c * c - tr2));
        }
        return worst;
      },
      mode);
}

std::vector<SweepOutcome<double>> reflection_rotation_batch(const std::vector<CirclePair>& pairs, Execution mode) {
  return sweep_map<double>(
      pairs.size(),
      [&](std::size_t i) {
        const auto& [c1, c2] = pairs[i];
        MobiusMap g = compose(reflect(c2), reflect(c1));
        double worst = 0.0;
        for (const RiemannPoint& x : intersect(c1, c2)) {
          double rot = rotation_angle(g, x).radians();
          double twice = 2.0 * angle_at(c1, c2, x).radians();
          worst = std::max(worst, angular_gap(rot, twice));
        }
        return worst;
      },
      mode);
}

}  // namespace cp1graft
