#pragma once

#include <array>
#include <optional>
#include <string>

#include "cp1graft/angle.hpp"
#include "cp1graft/atomic_table.hpp"
#include "cp1graft/circles.hpp"
#include "cp1graft/configurations.hpp"

namespace cp1graft {

// Vertex j of a triangle on the configuration (C12, C23, C13) lies on the
// pair slot kVertexPair[j]: V1 on C12 n C13, V2 on C12 n C23, V3 on C23 n C13.
inline constexpr std::array<PairSlot, 3> kVertexPair{kPair13, kPair12, kPair23};

// The combinatorial atomic immersion. Angles are indexed (a, b, c) by the
// punctures (alpha, beta, gamma).
struct AtomicImmersion {
  std::array<AngleValue, 3> angles;
  ConfigKind kind = ConfigKind::Hyperbolic;
  std::array<PiLinearForm, 3> target_forms;  // in (a, b, c, pi)
  std::array<AngleValue, 3> targets;
  std::array<int, 3> signs{1, 1, 1};  // +1 / -1
  bool star = false;
  std::string table_row;
  int big_slot = -1;  // the slot outside (0, pi), -1 if none
  bool banded = false;
};

std::string signs_str(const std::array<int, 3>& s, bool star);

enum class EuclideanCase { None, SumIsPi, MinusAIsPi, MinusBIsPi, MinusCIsPi };
// Which of a+b+c, -a+b+c, a-b+c, a+b-c equals pi, for angles in (0, pi).
EuclideanCase euclidean_case(const AngleValue& a, const AngleValue& b, const AngleValue& c);
// a+b+c > pi together with a+pi > b+c, b+pi > a+c, c+pi > a+b.
bool spherical_condition(const AngleValue& a, const AngleValue& b, const AngleValue& c);

// Kind, target forms, signs and star flag by the case analysis alone.
struct CaseOutcome {
  ConfigKind kind;
  std::array<PiLinearForm, 3> target_forms;
  std::array<int, 3> signs;
  bool star;
  int big_slot;
  bool banded;
};
// Throws OutOfRange, NotAtomic.
CaseOutcome classify_by_cases(const std::array<AngleValue, 3>& angles);

// Case analysis plus identification of the unique matching table row.
// Throws OutOfRange, NotAtomic.
AtomicImmersion atomic_classify(const AngleValue& a, const AngleValue& b, const AngleValue& c);
AtomicImmersion atomic_classify(const std::array<AngleValue, 3>& angles);

// The target triangle of a triangle with the given vertices: circles
// (D12, D23, D13), vertices (T1, T2, T3) with T1 on D12 n D13, T2 on
// D12 n D23, T3 on D23 n D13, positively oriented.
struct TargetDescriptor {
  std::array<Circle, 3> circles;
  std::array<RiemannPoint, 3> vertices;
  // The other intersection point of each target vertex's circle pair.
  std::array<RiemannPoint, 3> partners;
  bool star = false;
  std::array<int, 3> signs{1, 1, 1};
  // Bit s set when the target vertex on pair slot s is that pair's y point.
  int region_id = 0;
};

// Throws VerticesNotOnConfiguration.
TargetDescriptor target_from_vertices(const CircleConfiguration& cfg, const std::array<RiemannPoint, 3>& vertices);

// (angle_{v1}(C12, C13), angle_{v2}(C23, C12), angle_{v3}(C13, C23)).
std::array<AngleValue, 3> vertex_angles(const CircleConfiguration& cfg, const std::array<RiemannPoint, 3>& v);
// (angle_{T1}(D12, D13), angle_{T2}(D23, D12), angle_{T3}(D13, D23)).
std::array<AngleValue, 3> measured_target_angles(const TargetDescriptor& t);

struct RealizedImmersion {
  AtomicImmersion atomic;
  CircleConfiguration configuration;
  std::array<RiemannPoint, 3> vertices;
};

// Canonical placement: T1 = 0 and T2 on the positive real axis; Euclidean in
// the plane, hyperbolic in the unit disk, spherical in the stereographic
// chart of the unit sphere.
RealizedImmersion realize(const AtomicImmersion& atomic);
// The canonical target triangle used by realize.
TargetDescriptor canonical_target(const AtomicImmersion& atomic);

// Equal, or a difference of +pi at plus_slot and -pi at minus_slot.
struct FramedRelation {
  bool equal = true;
  int plus_slot = -1;
  int minus_slot = -1;
};
// Throws MismatchedFraming when kind, targets, signs or star differ, or the
// angle difference is not of the form (pi, -pi, 0) up to permutation.
FramedRelation same_framed_relation(const AtomicImmersion& t1, const AtomicImmersion& t2);

// (J13 J12, J12 J23, J23 J13) framed by the realized vertices.
FramedTriple holonomy_of(const RealizedImmersion& r);

// An atomic immersion on the configuration of t with vertices the framing.
// Throws PathologicalFraming, DegenerateTriple.
RealizedImmersion atomic_from_framed(const FramedTriple& t);

}  // namespace cp1graft
