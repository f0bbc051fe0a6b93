#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cp1graft/circles.hpp"
#include "cp1graft/errors.hpp"
#include "cp1graft/grafting.hpp"
#include "cp1graft/mobius.hpp"
#include "cp1graft/triangles.hpp"

namespace cp1graft {

// Serial is the reference path; Parallel splits the batch with OpenMP and
// must return the same items in the same order.
enum class Execution { Serial, Parallel };

template <class T>
struct SweepOutcome {
  std::optional<T> value;
  std::optional<ErrorCode> error;
  std::string message;
};

// out[i] = f(i), with library errors captured per item.
template <class T, class F>
std::vector<SweepOutcome<T>> sweep_map(std::size_t n, F&& f, Execution mode) {
  std::vector<SweepOutcome<T>> out(n);
  auto run = [&](std::size_t i) {
    try {
      out[i].value = f(i);
    } catch (const Error& e) {
      out[i].error = e.code();
      out[i].message = e.what();
    }
  };
  if (mode == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  }
  return out;
}

std::vector<SweepOutcome<AtomicImmersion>> classify_batch(const std::vector<std::array<AngleValue, 3>>& angles,
                                                          Execution mode);

std::vector<SweepOutcome<Decomposition>> decompose_batch(const std::vector<IndexTriple>& indices, Execution mode);

// max over both rotation invariants of |4 cos^2(theta / 2) - tr^2|.
std::vector<SweepOutcome<double>> trace_identity_batch(const std::vector<MobiusMap>& maps, Execution mode);

struct CirclePair {
  Circle c1, c2;
};
// max over both intersection points x of |Rot(J2 J1, x) - 2 angle_x(C1, C2)|.
std::vector<SweepOutcome<double>> reflection_rotation_batch(const std::vector<CirclePair>& pairs, Execution mode);

}  // namespace cp1graft
