#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cp1graft/angle.hpp"
#include "cp1graft/triangles.hpp"

namespace cp1graft {

// Indices (I_alpha, I_beta, I_gamma), twice the angles (a, b, c).
using IndexTriple = std::array<AngleValue, 3>;

// Multiplicities of the edge arcs e_{ij} and the core arcs e_i.
struct GraftingMultiCurve {
  std::array<std::int64_t, 3> edge{};  // by pair slot: (ab, bc, ac)
  std::array<std::int64_t, 3> core{};  // (a, b, c)

  std::int64_t& edge_between(int i, int j);
  std::int64_t edge_between(int i, int j) const;
  // Edge multiplicity of the edge not touching slot i.
  std::int64_t opposite(int i) const;
  bool empty() const;
  bool operator==(const GraftingMultiCurve&) const = default;
};

// Pair slot of the edge joining punctures i != j.
PairSlot edge_slot(int i, int j);

// Each edge adds 2pi at both endpoints, each core arc 4pi at its puncture.
IndexTriple apply_graft(const IndexTriple& indices, const GraftingMultiCurve& curve);

// Twice the angles of an atomic immersion.
IndexTriple atomic_indices(const AtomicImmersion& atomic);

// Throws InvalidIndices unless every index is positive and I/(2pi) is not
// an integer.
void validate_indices(const IndexTriple& indices);

// Whether (I/2) is the angle triple of an atomic immersion up to relabeling.
bool is_atomic_indices(const IndexTriple& indices);

enum class Graftability { Graftable, GraftableWithPerturbation, NotGraftable };
const char* to_string(Graftability g);

struct GraftabilityResult {
  Graftability verdict = Graftability::Graftable;
  std::string reason;  // set for NotGraftable and GraftableWithPerturbation
};

// Throws UnsupportedCurveShape unless the curve has the shape eta or eta'
// with respect to a single distinguished puncture.
GraftabilityResult graftability(const AtomicImmersion& atomic, const GraftingMultiCurve& curve);

enum class Reroute { None, CoreToEuclidean, EdgeToEuclidean };
const char* to_string(Reroute r);

// The atomic part and the curve are in the input's labels. `relabel[i]` is
// the input label sitting at sorted position i.
struct Decomposition {
  AtomicImmersion atomic;
  GraftingMultiCurve curve;
  std::array<int, 3> relabel{0, 1, 2};
  bool perturbation_flag = false;
  Reroute reroute = Reroute::None;
  // floor(x / pi) of the sorted angles and the curve before rerouting.
  std::array<std::int64_t, 3> k{};
  GraftingMultiCurve unadjusted_curve;
  bool banded = false;
};

// Throws InvalidIndices.
Decomposition decompose(const IndexTriple& indices);

// Single one-edge grafts turning two atomics with the same framed holonomy
// into structures with equal indices. Empty curves when the atomics agree.
// Throws NotSameFramedHolonomy.
std::pair<GraftingMultiCurve, GraftingMultiCurve> equalize(const AtomicImmersion& t1, const AtomicImmersion& t2);
std::pair<GraftingMultiCurve, GraftingMultiCurve> equalize(const Decomposition& d1, const Decomposition& d2);

}  // namespace cp1graft
