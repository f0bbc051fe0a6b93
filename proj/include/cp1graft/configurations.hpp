#pragma once

#include <array>
#include <optional>
#include <string>

#include "cp1graft/circles.hpp"
#include "cp1graft/mobius.hpp"

namespace cp1graft {

enum class ConfigKind { Euclidean, Spherical, Hyperbolic };
const char* to_string(ConfigKind k);

// Pair slots of a configuration (C1, C2, C3): (C1,C2), (C2,C3), (C1,C3).
enum PairSlot : int { kPair12 = 0, kPair23 = 1, kPair13 = 2 };
inline constexpr std::array<std::array<int, 2>, 3> kPairCircles{{{0, 1}, {1, 2}, {0, 2}}};

struct PairIntersection {
  RiemannPoint x, y;
};

// A non-degenerate ordered triple of circles. Every pair meets in exactly
// two points; Euclidean iff a common point exists.
class CircleConfiguration {
 public:
  const std::array<Circle, 3>& circles() const { return circles_; }
  const Circle& circle(int i) const { return circles_[i]; }
  const PairIntersection& pair(PairSlot slot) const { return pairs_[slot]; }
  ConfigKind kind() const { return kind_; }
  // Euclidean only: the common point of the three circles.
  const std::optional<RiemannPoint>& common_point() const { return common_; }
  // Euclidean only: +1 if the directions of (C1, C2, C3) at the common point
  // are in anticlockwise cyclic order, -1 otherwise; 0 for other kinds.
  int common_point_cyclic_order() const { return cyclic_order_; }
  int distinct_points() const { return kind_ == ConfigKind::Euclidean ? 4 : 6; }

  friend CircleConfiguration build_configuration(const Circle&, const Circle&, const Circle&);

 private:
  CircleConfiguration(std::array<Circle, 3> c, std::array<PairIntersection, 3> p, ConfigKind k,
                      std::optional<RiemannPoint> common, int order)
      : circles_(c), pairs_(p), kind_(k), common_(common), cyclic_order_(order) {}
  std::array<Circle, 3> circles_;
  std::array<PairIntersection, 3> pairs_;
  ConfigKind kind_;
  std::optional<RiemannPoint> common_;
  int cyclic_order_;
};

// Throws DegenerateConfiguration when a pair is equal, tangent or disjoint,
// or when fewer than 4 distinct intersection points remain.
CircleConfiguration build_configuration(const Circle& c1, const Circle& c2, const Circle& c3);

// Whether C_i separates the two intersection points of the other pair.
bool separates(const CircleConfiguration& cfg, int circle_index);

// The circle orthogonal to all three. Throws NotHyperbolic.
Circle dual_circle(const CircleConfiguration& cfg);

// (A, B, C) with A B C = 1 in PSL2.
struct EllipticTriple {
  MobiusMap A, B, C;
};

// One fixed point per generator: p_A, p_B, p_C.
struct FramedTriple {
  EllipticTriple triple;
  std::array<RiemannPoint, 3> framing;
};

// (J3 J1, J1 J2, J2 J3) for the reflections J_i in C_i.
EllipticTriple to_elliptic_triple(const CircleConfiguration& cfg);

// (C_{A,B}, C_{B,C}, C_{A,C}), each the circle through the fixed points of
// the two generators. Throws DegenerateTriple for coaxial triples, for
// non-elliptic generators, or when the four fixed points are not concyclic.
CircleConfiguration from_elliptic_triple(const EllipticTriple& t);

// PSL2 distance of A B C from the identity.
double product_residual(const EllipticTriple& t);

struct VertexRotationEntry {
  RiemannPoint fixed_point;
  double rotation_residual = 0.0;  // |Rot(G, p) - 2 angle|
  double product_distance = 0.0;   // PSL2 distance between G and its reflection product
  // The identity also holds at the other fixed point (always true for
  // corresponding inputs).
  bool holds_at_both = false;
};

struct VertexRotationReport {
  std::array<VertexRotationEntry, 3> entries;
  double max_residual() const;
};

// A = J_{A,C} J_{A,B} and 2 angle_{p_A}(C_{A,B}, C_{A,C}) = Rot(A, p_A),
// and the cyclic analogues for B and C. Throws MismatchedInputs when the
// triple is not the reflection triple of the configuration.
VertexRotationReport verify_vertex_rotation(const EllipticTriple& t, const CircleConfiguration& cfg);

// The Mobius map sending three labeled points of one configuration to the
// corresponding points of another.
MobiusMap configuration_map(const std::array<RiemannPoint, 3>& from, const std::array<RiemannPoint, 3>& to);

CircleConfiguration transform_configuration(const MobiusMap& m, const CircleConfiguration& cfg);

}  // namespace cp1graft
