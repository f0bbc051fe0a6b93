#include "cp1graft/grafting.hpp"

#include <algorithm>
#include <numeric>

#include "cp1graft/errors.hpp"

namespace cp1graft {

PairSlot edge_slot(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) fail(ErrorCode::Internal, "edge needs two distinct punctures");
  int lo = std::min(i, j), hi = std::max(i, j);
  if (lo == 0 && hi == 1) return kPair12;
  if (lo == 1 && hi == 2) return kPair23;
  return kPair13;
}

std::int64_t& GraftingMultiCurve::edge_between(int i, int j) { return edge[edge_slot(i, j)]; }
std::int64_t GraftingMultiCurve::edge_between(int i, int j) const { return edge[edge_slot(i, j)]; }
std::int64_t GraftingMultiCurve::opposite(int i) const { return edge_between((i + 1) % 3, (i + 2) % 3); }

bool GraftingMultiCurve::empty() const {
  return std::all_of(edge.begin(), edge.end(), [](auto g) { return g == 0; }) &&
         std::all_of(core.begin(), core.end(), [](auto g) { return g == 0; });
}

IndexTriple apply_graft(const IndexTriple& indices, const GraftingMultiCurve& curve) {
  IndexTriple out = indices;
  for (int s = 0; s < 3; ++s) {
    for (int i : kPairCircles[s]) out[i] += (2 * curve.edge[s]) * AngleValue::pi_fraction(1);
  }
  for (int i = 0; i < 3; ++i) out[i] += (4 * curve.core[i]) * AngleValue::pi_fraction(1);
  return out;
}

IndexTriple atomic_indices(const AtomicImmersion& atomic) {
  return {2 * atomic.angles[0], 2 * atomic.angles[1], 2 * atomic.angles[2]};
}

namespace {

const Rational kHalf(1, 2);

// Whether x is an integer multiple of pi (exactly, or within the band).
bool on_pi_lattice(const AngleValue& x) {
  std::int64_t k = floor_pi(x);
  return decide_sign(x - AngleValue::pi_fraction(k)).sign == 0 ||
         decide_sign(x - AngleValue::pi_fraction(k + 1)).sign == 0;
}

std::array<AngleValue, 3> halves(const IndexTriple& indices) {
  return {indices[0].scaled(kHalf), indices[1].scaled(kHalf), indices[2].scaled(kHalf)};
}

bool in_open(const AngleValue& x, std::int64_t lo, std::int64_t hi) {
  return decide_sign(x - AngleValue::pi_fraction(lo)).sign > 0 && decide_sign(x - AngleValue::pi_fraction(hi)).sign < 0;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

void validate_indices(const IndexTriple& indices) {
  for (int i = 0; i < 3; ++i) {
    if (decide_sign(indices[i]).sign <= 0) fail(ErrorCode::InvalidIndices, "index " + indices[i].str() + " is not positive");
    if (on_pi_lattice(indices[i].scaled(kHalf))) {
      fail(ErrorCode::InvalidIndices, "index " + indices[i].str() + " is a multiple of 2pi (integer exponent)");
    }
  }
}

bool is_atomic_indices(const IndexTriple& indices) {
  try {
    validate_indices(indices);
  } catch (const Error&) {
    return false;
  }
  auto x = halves(indices);
  for (int s = 0; s < 3; ++s) {
    const AngleValue &a = x[s], &b = x[(s + 1) % 3], &c = x[(s + 2) % 3];
    if (!in_open(b, 0, 1) || !in_open(c, 0, 1)) continue;
    if (in_open(a, 0, 2)) return true;
    if (in_open(a, 2, 3) && decide_sign(a - b - c - AngleValue::pi_fraction(1)).sign == 0) return true;
  }
  return false;
}

const char* to_string(Graftability g) {
  switch (g) {
    case Graftability::Graftable: return "graftable";
    case Graftability::GraftableWithPerturbation: return "graftable_with_perturbation";
    case Graftability::NotGraftable: return "not_graftable";
  }
  return "?";
}

const char* to_string(Reroute r) {
  switch (r) {
    case Reroute::None: return "none";
    case Reroute::CoreToEuclidean: return "core_to_euclidean";
    case Reroute::EdgeToEuclidean: return "edge_to_euclidean";
  }
  return "?";
}

GraftabilityResult graftability(const AtomicImmersion& atomic, const GraftingMultiCurve& curve) {
  const auto& x = atomic.angles;
  const AngleValue pi = AngleValue::pi_fraction(1);
  // The slot whose -x + others = pi, for Euclidean atomics with small angles.
  int special = -1;
  if (atomic.kind == ConfigKind::Euclidean && atomic.big_slot < 0) {
    for (int i = 0; i < 3; ++i) {
      if (same_angle(-x[i] + x[(i + 1) % 3] + x[(i + 2) % 3], pi)) special = i;
    }
  }
  int cores = 0, core_slot = -1;
  for (int i = 0; i < 3; ++i) {
    if (curve.core[i] > 0) {
      ++cores;
      core_slot = i;
    }
    if (curve.core[i] < 0 || curve.edge[i] < 0) fail(ErrorCode::UnsupportedCurveShape, "negative multiplicity");
  }
  int alpha = atomic.big_slot >= 0 ? atomic.big_slot : (core_slot >= 0 ? core_slot : std::max(special, 0));
  if (cores > 1 || (cores == 1 && core_slot != alpha)) {
    fail(ErrorCode::UnsupportedCurveShape, "core arcs allowed only at the distinguished puncture");
  }
  if (curve.core[alpha] > 0 && curve.opposite(alpha) > 0) {
    fail(ErrorCode::UnsupportedCurveShape, "curve has both a core arc and the opposite edge");
  }
  const AngleValue& a = x[alpha];
  const AngleValue& b = x[(alpha + 1) % 3];
  const AngleValue& c = x[(alpha + 2) % 3];
  switch (atomic.kind) {
    case ConfigKind::Spherical:
      return {};
    case ConfigKind::Hyperbolic:
      if (in_open(a, 1, 2) && decide_sign(a - b - c - pi).sign > 0 && curve.opposite(alpha) > 0) {
        return {Graftability::GraftableWithPerturbation, "opposite edge develops onto a circle; graftable after deformation"};
      }
      return {};
    case ConfigKind::Euclidean:
      if (special == alpha && curve.core[alpha] > 0) {
        return {Graftability::NotGraftable, "puncture develops to the common point; no core graft"};
      }
      if ((in_open(a, 1, 2) && same_angle(a - b - c, pi)) || in_open(a, 2, 3)) {
        if (curve.opposite(alpha) > 0) {
          return {Graftability::NotGraftable, "both ends of the opposite edge develop to the common point"};
        }
      }
      return {};
  }
  return {};
}

Decomposition decompose(const IndexTriple& indices) {
  validate_indices(indices);
  auto x = halves(indices);
  Decomposition d;
  std::array<int, 3> perm{0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) { return compare(x[i], x[j]).sign > 0; });
  d.relabel = perm;
  const AngleValue pi = AngleValue::pi_fraction(1);
  const AngleValue &a = x[perm[0]], &b = x[perm[1]], &c = x[perm[2]];
  const std::int64_t ka = floor_pi(a), kb = floor_pi(b), kc = floor_pi(c);
  d.k = {ka, kb, kc};

  // Sorted-label multiplicities.
  std::int64_t g_ab = 0, g_ac = 0, g_bc = 0, g_a = 0;
  if (ka >= kb + kc) {
    g_ac = kc;
    g_ab = kb;
    g_a = floor_div(ka - kb - kc, 2);
  } else {
    std::int64_t l = ka - kb, lp = kc + kb - ka;
    g_ac = l + floor_div(lp, 2);
    g_ab = kb - ceil_div(lp, 2);
    g_bc = ceil_div(lp, 2);
  }
  auto to_curve = [&]() {
    GraftingMultiCurve m;
    m.edge_between(perm[0], perm[1]) = g_ab;
    m.edge_between(perm[0], perm[2]) = g_ac;
    m.edge_between(perm[1], perm[2]) = g_bc;
    m.core[perm[0]] = g_a;
    return m;
  };
  d.unadjusted_curve = to_curve();

  AngleValue ar = a - (g_ac + g_ab + 2 * g_a) * pi;
  AngleValue br = b - (g_bc + g_ab) * pi;
  AngleValue cr = c - (g_ac + g_bc) * pi;
  for (const AngleValue* r : {&ar, &br, &cr}) {
    if (on_pi_lattice(*r)) fail(ErrorCode::Internal, "reduced angle " + r->str() + " lies on the pi lattice");
  }
  if (!(in_open(ar, 0, 1) || in_open(ar, 1, 2)) || !in_open(br, 0, 1) || !in_open(cr, 0, 1)) {
    fail(ErrorCode::Internal, "reduced angles out of range");
  }

  if (g_a > 0 && in_open(ar, 0, 1) && same_angle(-ar + br + cr, pi)) {
    ar += 2 * pi;
    g_a -= 1;
    d.reroute = Reroute::CoreToEuclidean;
  } else if (g_bc > 0 && in_open(ar, 1, 2) && same_angle(ar - br - cr, pi)) {
    ar -= pi;
    br += pi;
    g_ac += 1;
    g_bc -= 1;
    d.reroute = Reroute::EdgeToEuclidean;
  }
  d.curve = to_curve();

  std::array<AngleValue, 3> reduced;
  reduced[perm[0]] = ar;
  reduced[perm[1]] = br;
  reduced[perm[2]] = cr;
  d.atomic = atomic_classify(reduced);
  d.banded = d.atomic.banded;

  IndexTriple back = apply_graft(atomic_indices(d.atomic), d.curve);
  for (int i = 0; i < 3; ++i) {
    if (!same_angle(back[i], indices[i])) fail(ErrorCode::Internal, "reconstruction failed at slot " + std::to_string(i));
  }
  GraftabilityResult g = graftability(d.atomic, d.curve);
  if (g.verdict == Graftability::NotGraftable) fail(ErrorCode::Internal, "decomposition is not graftable: " + g.reason);
  d.perturbation_flag = g.verdict == Graftability::GraftableWithPerturbation;
  return d;
}

std::pair<GraftingMultiCurve, GraftingMultiCurve> equalize(const AtomicImmersion& t1, const AtomicImmersion& t2) {
  FramedRelation r;
  try {
    r = same_framed_relation(t1, t2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MismatchedFraming) fail(ErrorCode::NotSameFramedHolonomy, e.what());
    throw;
  }
  if (r.equal) return {};
  const int other = 3 - r.plus_slot - r.minus_slot;
  GraftingMultiCurve m1, m2;
  m1.edge_between(r.minus_slot, other) = 1;
  m2.edge_between(r.plus_slot, other) = 1;
  return {m1, m2};
}

std::pair<GraftingMultiCurve, GraftingMultiCurve> equalize(const Decomposition& d1, const Decomposition& d2) {
  return equalize(d1.atomic, d2.atomic);
}

}  // namespace cp1graft
