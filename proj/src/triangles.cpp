#include "cp1graft/triangles.hpp"

#include <cmath>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

std::string signs_str(const std::array<int, 3>& s, bool star) {
  std::string out;
  for (int v : s) out += v > 0 ? '+' : '-';
  if (star) out += '*';
  return out;
}

namespace {

AngleValue pi_k(std::int64_t k) { return AngleValue::pi_fraction(k); }

PiLinearForm F(std::int64_t ka, std::int64_t kb, std::int64_t kc, std::int64_t kpi) {
  return PiLinearForm{{ka, kb, kc, kpi}};
}

struct Decider {
  bool banded = false;
  int sign(const AngleValue& x) {
    SignDecision d = decide_sign(x);
    banded = banded || d.banded;
    return d.sign;
  }
  int cmp(const AngleValue& x, const AngleValue& y) { return sign(x - y); }
};

// Frame-local result: forms over (a', b', c') = (x_s, x_{s+1}, x_{s+2}).
struct FrameResult {
  ConfigKind kind;
  std::array<PiLinearForm, 3> t;
  std::array<int, 3> s;
  bool star;
};

// Re-expresses a frame-local form in the original variables.
PiLinearForm unrotate_form(const PiLinearForm& f, int shift) {
  PiLinearForm g;
  g.k[3] = f.k[3];
  for (int i = 0; i < 3; ++i) g.k[(i + shift) % 3] = f.k[i];
  return g;
}

// Frame slot j sits at original slot (j + shift) % 3 for vertices and
// signs. Star targets are attached to the swapped configuration, so their
// slots rotate the other way.
CaseOutcome unrotate(const FrameResult& r, int shift, int big_slot, bool banded) {
  CaseOutcome out{r.kind, {}, {}, r.star, big_slot, banded};
  for (int k = 0; k < 3; ++k) {
    int sign_src = (k - shift + 3) % 3;
    int target_src = r.star ? (k + shift) % 3 : sign_src;
    out.target_forms[k] = unrotate_form(r.t[target_src], shift);
    out.signs[k] = r.s[sign_src];
  }
  return out;
}

std::array<AngleValue, 3> rotated(const std::array<AngleValue, 3>& x, int shift) {
  return {x[shift % 3], x[(shift + 1) % 3], x[(shift + 2) % 3]};
}

enum class Band { Small, Mid, High };

Band band_of(const AngleValue& x, Decider& d) {
  if (d.sign(x) <= 0) fail(ErrorCode::OutOfRange, "angle " + x.str() + " is not positive");
  for (std::int64_t k = 1; k <= 3; ++k) {
    int c = d.cmp(x, pi_k(k));
    if (c == 0) fail(ErrorCode::OutOfRange, "angle " + x.str() + " is a multiple of pi");
    if (c < 0) return k == 1 ? Band::Small : (k == 2 ? Band::Mid : Band::High);
  }
  fail(ErrorCode::OutOfRange, "angle " + x.str() + " is not below 3pi");
}

// Big angle a' in (pi, 2pi), b', c' in (0, pi).
FrameResult classify_mid(const std::array<AngleValue, 3>& x, Decider& d) {
  const AngleValue &a = x[0], &b = x[1], &c = x[2];
  int s1 = d.cmp(a + b + c, pi_k(3));
  if (s1 > 0) return {ConfigKind::Hyperbolic, {F(-1, 0, 0, 2), F(0, -1, 0, 1), F(0, 0, -1, 1)}, {-1, -1, -1}, false};
  if (s1 == 0) return {ConfigKind::Euclidean, {F(-1, 0, 0, 2), F(0, 0, -1, 1), F(0, -1, 0, 1)}, {1, 1, 1}, true};
  int s2 = d.cmp(a - b - c, pi_k(1));
  if (s2 > 0) return {ConfigKind::Hyperbolic, {F(-1, 0, 0, 2), F(0, 1, 0, 0), F(0, 0, 1, 0)}, {-1, 1, 1}, false};
  if (s2 == 0) return {ConfigKind::Euclidean, {F(-1, 0, 0, 2), F(0, 0, 1, 0), F(0, 1, 0, 0)}, {1, -1, -1}, true};
  int s3i = d.cmp(a - b + c, pi_k(1));
  if (s3i <= 0) {
    return {s3i < 0 ? ConfigKind::Hyperbolic : ConfigKind::Euclidean,
            {F(1, 0, 0, -1), F(0, -1, 0, 1), F(0, 0, 1, 0)},
            {1, -1, 1},
            false};
  }
  int s3ii = d.cmp(a + b - c, pi_k(1));
  if (s3ii <= 0) {
    return {s3ii < 0 ? ConfigKind::Hyperbolic : ConfigKind::Euclidean,
            {F(1, 0, 0, -1), F(0, 1, 0, 0), F(0, 0, -1, 1)},
            {1, 1, -1},
            false};
  }
  return {ConfigKind::Spherical, {F(-1, 0, 0, 2), F(0, -1, 0, 1), F(0, 0, -1, 1)}, {-1, -1, -1}, false};
}

}  // namespace

EuclideanCase euclidean_case(const AngleValue& a, const AngleValue& b, const AngleValue& c) {
  const AngleValue pi = pi_k(1);
  if (same_angle(a + b + c, pi)) return EuclideanCase::SumIsPi;
  if (same_angle(-a + b + c, pi)) return EuclideanCase::MinusAIsPi;
  if (same_angle(a - b + c, pi)) return EuclideanCase::MinusBIsPi;
  if (same_angle(a + b - c, pi)) return EuclideanCase::MinusCIsPi;
  return EuclideanCase::None;
}

bool spherical_condition(const AngleValue& a, const AngleValue& b, const AngleValue& c) {
  const AngleValue pi = pi_k(1);
  return compare(a + b + c, pi).sign > 0 && compare(a + pi, b + c).sign > 0 && compare(b + pi, a + c).sign > 0 &&
         compare(c + pi, a + b).sign > 0;
}

CaseOutcome classify_by_cases(const std::array<AngleValue, 3>& angles) {
  Decider d;
  std::array<Band, 3> bands{band_of(angles[0], d), band_of(angles[1], d), band_of(angles[2], d)};
  int big = -1;
  for (int i = 0; i < 3; ++i) {
    if (bands[i] == Band::Small) continue;
    if (big >= 0) fail(ErrorCode::OutOfRange, "more than one angle exceeds pi");
    big = i;
  }
  if (big < 0) {
    const AngleValue &a = angles[0], &b = angles[1], &c = angles[2];
    int sum = d.cmp(a + b + c, pi_k(1));
    if (sum < 0) return {ConfigKind::Hyperbolic, {F(1, 0, 0, 0), F(0, 1, 0, 0), F(0, 0, 1, 0)}, {1, 1, 1}, false, -1, d.banded};
    if (sum == 0) return {ConfigKind::Euclidean, {F(1, 0, 0, 0), F(0, 1, 0, 0), F(0, 0, 1, 0)}, {1, 1, 1}, false, -1, d.banded};
    for (int s = 0; s < 3; ++s) {
      auto x = rotated(angles, s);
      int t = d.cmp(x[0] + pi_k(1), x[1] + x[2]);
      if (t < 0) {
        FrameResult r{ConfigKind::Hyperbolic, {F(1, 0, 0, 0), F(0, -1, 0, 1), F(0, 0, -1, 1)}, {1, -1, -1}, false};
        return unrotate(r, s, -1, d.banded);
      }
      if (t == 0) {
        FrameResult r{ConfigKind::Euclidean, {F(1, 0, 0, 0), F(0, 0, -1, 1), F(0, -1, 0, 1)}, {-1, 1, 1}, true};
        return unrotate(r, s, -1, d.banded);
      }
    }
    return {ConfigKind::Spherical, {F(1, 0, 0, 0), F(0, 1, 0, 0), F(0, 0, 1, 0)}, {1, 1, 1}, false, -1, d.banded};
  }
  auto x = rotated(angles, big);
  if (bands[big] == Band::High) {
    if (d.cmp(x[0] - x[1] - x[2], pi_k(1)) != 0) {
      fail(ErrorCode::NotAtomic, "angle in (2pi, 3pi) needs big - other - other = pi");
    }
    FrameResult r{ConfigKind::Euclidean, {F(1, 0, 0, -2), F(0, -1, 0, 1), F(0, 0, -1, 1)}, {1, -1, -1}, false};
    return unrotate(r, big, big, d.banded);
  }
  FrameResult r = classify_mid(x, d);
  return unrotate(r, big, big, d.banded);
}

AtomicImmersion atomic_classify(const std::array<AngleValue, 3>& angles) {
  CaseOutcome c = classify_by_cases(angles);
  const AtomicTableRow* found = nullptr;
  for (const auto& row : atomic_table()) {
    if (row.kind != c.kind || row.star != c.star || row.signs != c.signs || row.targets != c.target_forms) continue;
    if (!row_matches(row, angles)) continue;
    if (found) fail(ErrorCode::Internal, "two table rows match " + row.id + " and " + found->id);
    found = &row;
  }
  if (!found) fail(ErrorCode::Internal, "no table row agrees with the case analysis");
  AtomicImmersion out;
  out.angles = angles;
  out.kind = c.kind;
  out.target_forms = c.target_forms;
  for (int i = 0; i < 3; ++i) out.targets[i] = c.target_forms[i].eval(angles);
  out.signs = c.signs;
  out.star = c.star;
  out.table_row = found->id;
  out.big_slot = c.big_slot;
  out.banded = c.banded;
  return out;
}

AtomicImmersion atomic_classify(const AngleValue& a, const AngleValue& b, const AngleValue& c) {
  return atomic_classify(std::array<AngleValue, 3>{a, b, c});
}

namespace {

// Sends t1 to 0 and t1_partner to inf; positive iff t3 is anticlockwise of t2.
bool positively_oriented(const RiemannPoint& t1, const RiemannPoint& t1_partner, const RiemannPoint& t2,
                         const RiemannPoint& t3) {
  MobiusMap n = normalize_pair(t1, t1_partner);
  RiemannPoint p2 = apply(n, t2), p3 = apply(n, t3);
  // Im(conj(t2) t3) in homogeneous form, scaled by |z2 w2|^2 > 0.
  cplx v = std::conj(p2.z1() * std::conj(p2.z2())) * (p3.z1() * std::conj(p3.z2()));
  return v.imag() > 0.0;
}

int which_of_pair(const PairIntersection& p, const RiemannPoint& v) {
  double dx = chordal_distance(p.x, v), dy = chordal_distance(p.y, v);
  if (std::min(dx, dy) > geom_tol()) return -1;
  return dx <= dy ? 0 : 1;
}

const RiemannPoint& pick(const PairIntersection& p, int which) { return which == 0 ? p.x : p.y; }

}  // namespace

TargetDescriptor target_from_vertices(const CircleConfiguration& cfg, const std::array<RiemannPoint, 3>& v) {
  // which[j]: index (0 = x, 1 = y) of v_j within its pair.
  std::array<int, 3> which{};
  for (int j = 0; j < 3; ++j) {
    which[j] = which_of_pair(cfg.pair(kVertexPair[j]), v[j]);
    if (which[j] < 0) fail(ErrorCode::VerticesNotOnConfiguration, "vertex " + std::to_string(j + 1) + " is not on its circle pair");
  }
  // tw[s]: index within pair slot s of the target vertex on that pair.
  std::array<int, 3> tw{};
  bool star = false;
  const PairIntersection& p13 = cfg.pair(kPair13);
  const PairIntersection& p12 = cfg.pair(kPair12);
  const PairIntersection& p23 = cfg.pair(kPair23);
  switch (cfg.kind()) {
    case ConfigKind::Euclidean: {
      const RiemannPoint& common = *cfg.common_point();
      auto non_common = [&](const PairIntersection& p) {
        return chordal_distance(p.x, common) > chordal_distance(p.y, common) ? 0 : 1;
      };
      tw = {non_common(p12), non_common(p23), non_common(p13)};
      const RiemannPoint& t1 = pick(p13, tw[kPair13]);
      const RiemannPoint& p = pick(p12, tw[kPair12]);
      const RiemannPoint& q = pick(p23, tw[kPair23]);
      star = !positively_oriented(t1, common, p, q);
      break;
    }
    case ConfigKind::Hyperbolic: {
      Circle ch = dual_circle(cfg);
      for (int side : {-1, 1}) {
        std::array<int, 3> cand{};
        for (int s = 0; s < 3; ++s) {
          const PairIntersection& p = cfg.pair(static_cast<PairSlot>(s));
          cand[s] = side_of(ch, p.x) == side ? 0 : 1;
        }
        if (positively_oriented(pick(p13, cand[kPair13]), pick(p13, 1 - cand[kPair13]), pick(p12, cand[kPair12]),
                                pick(p23, cand[kPair23]))) {
          tw = cand;
          break;
        }
        if (side == 1) fail(ErrorCode::Internal, "neither side of the dual circle carries a positive triangle");
      }
      break;
    }
    case ConfigKind::Spherical: {
      std::array<int, 3> cand{};
      for (int j = 0; j < 3; ++j) cand[kVertexPair[j]] = which[j];
      if (!positively_oriented(pick(p13, cand[kPair13]), pick(p13, 1 - cand[kPair13]), pick(p12, cand[kPair12]),
                               pick(p23, cand[kPair23]))) {
        for (int& c : cand) c = 1 - c;
      }
      tw = cand;
      break;
    }
  }
  TargetDescriptor out{{cfg.circle(0), cfg.circle(1), cfg.circle(2)}, {}, {}, star, {}, 0};
  for (int s = 0; s < 3; ++s) {
    if (tw[s] == 1) out.region_id |= 1 << s;
  }
  // Target vertex slots: non-star (T1, T2, T3) on pairs (13, 12, 23); star
  // swaps D12 = C13 and D13 = C12, putting T2 on pair 23 and T3 on pair 12.
  const std::array<PairSlot, 3> tpair = star ? std::array<PairSlot, 3>{kPair13, kPair23, kPair12} : kVertexPair;
  if (star) out.circles = {cfg.circle(2), cfg.circle(1), cfg.circle(0)};
  for (int k = 0; k < 3; ++k) {
    const PairIntersection& p = cfg.pair(tpair[k]);
    out.vertices[k] = pick(p, tw[tpair[k]]);
    out.partners[k] = pick(p, 1 - tw[tpair[k]]);
  }
  for (int j = 0; j < 3; ++j) out.signs[j] = which[j] == tw[kVertexPair[j]] ? 1 : -1;
  return out;
}

std::array<AngleValue, 3> vertex_angles(const CircleConfiguration& cfg, const std::array<RiemannPoint, 3>& v) {
  return {angle_at(cfg.circle(0), cfg.circle(2), v[0]), angle_at(cfg.circle(1), cfg.circle(0), v[1]),
          angle_at(cfg.circle(2), cfg.circle(1), v[2])};
}

std::array<AngleValue, 3> measured_target_angles(const TargetDescriptor& t) {
  const auto& d = t.circles;  // (D12, D23, D13)
  return {angle_at(d[0], d[2], t.vertices[0]), angle_at(d[1], d[0], t.vertices[1]),
          angle_at(d[2], d[1], t.vertices[2])};
}

TargetDescriptor canonical_target(const AtomicImmersion& atomic) {
  const double A = atomic.targets[0].radians();
  const double B = atomic.targets[1].radians();
  const double C = atomic.targets[2].radians();
  const RiemannPoint inf = RiemannPoint::infinity();
  const cplx dir = std::polar(1.0, A);
  TargetDescriptor t{{Circle::unit(), Circle::unit(), Circle::unit()}, {}, {}, atomic.star, atomic.signs, 0};
  auto fin = [](cplx z) { return RiemannPoint::finite(z); };
  switch (atomic.kind) {
    case ConfigKind::Euclidean: {
      cplx t2 = 1.0, t3 = std::sin(B) / std::sin(C) * dir;
      t.vertices = {fin(0.0), fin(t2), fin(t3)};
      t.circles = {circle_through(fin(0.0), fin(t2), inf), circle_through(fin(t2), fin(t3), inf),
                   circle_through(fin(0.0), fin(t3), inf)};
      t.partners = {inf, inf, inf};
      break;
    }
    case ConfigKind::Hyperbolic: {
      double ch12 = (std::cos(A) * std::cos(B) + std::cos(C)) / (std::sin(A) * std::sin(B));
      double ch13 = (std::cos(A) * std::cos(C) + std::cos(B)) / (std::sin(A) * std::sin(C));
      cplx t2 = std::tanh(0.5 * std::acosh(ch12));
      cplx t3 = std::tanh(0.5 * std::acosh(ch13)) * dir;
      // Geodesics of the disk: circles through p, q and 1/conj(q).
      auto refl = [&](cplx z) { return fin(1.0 / std::conj(z)); };
      t.vertices = {fin(0.0), fin(t2), fin(t3)};
      t.circles = {circle_through(fin(0.0), fin(t2), refl(t2)), circle_through(fin(t2), fin(t3), refl(t2)),
                   circle_through(fin(0.0), fin(t3), refl(t3))};
      t.partners = {inf, refl(t2), refl(t3)};
      break;
    }
    case ConfigKind::Spherical: {
      double c12 = (std::cos(C) + std::cos(A) * std::cos(B)) / (std::sin(A) * std::sin(B));
      double c13 = (std::cos(B) + std::cos(A) * std::cos(C)) / (std::sin(A) * std::sin(C));
      cplx t2 = std::tan(0.5 * std::acos(std::clamp(c12, -1.0, 1.0)));
      cplx t3 = std::tan(0.5 * std::acos(std::clamp(c13, -1.0, 1.0))) * dir;
      // Great circles: through p, q and the antipode -1/conj(q).
      auto anti = [&](cplx z) { return fin(-1.0 / std::conj(z)); };
      t.vertices = {fin(0.0), fin(t2), fin(t3)};
      t.circles = {circle_through(fin(0.0), fin(t2), anti(t2)), circle_through(fin(t2), fin(t3), anti(t2)),
                   circle_through(fin(0.0), fin(t3), anti(t3))};
      t.partners = {inf, anti(t2), anti(t3)};
      break;
    }
  }
  return t;
}

RealizedImmersion realize(const AtomicImmersion& atomic) {
  TargetDescriptor t = canonical_target(atomic);
  const auto& d = t.circles;  // (D12, D23, D13)
  const auto& s = atomic.signs;
  if (!atomic.star) {
    std::array<RiemannPoint, 3> v;
    for (int j = 0; j < 3; ++j) v[j] = s[j] > 0 ? t.vertices[j] : t.partners[j];
    return {atomic, build_configuration(d[0], d[1], d[2]), v};
  }
  // Swapped configuration: C12 = D13, C23 = D23, C13 = D12; the common
  // point infinity is every vertex's partner.
  const RiemannPoint inf = RiemannPoint::infinity();
  std::array<RiemannPoint, 3> v{s[0] > 0 ? t.vertices[0] : inf, s[1] > 0 ? t.vertices[2] : inf,
                                s[2] > 0 ? t.vertices[1] : inf};
  return {atomic, build_configuration(d[2], d[1], d[0]), v};
}

FramedRelation same_framed_relation(const AtomicImmersion& t1, const AtomicImmersion& t2) {
  if (t1.kind != t2.kind || t1.star != t2.star || t1.signs != t2.signs) {
    fail(ErrorCode::MismatchedFraming, "kind, signs or star decoration differ");
  }
  for (int i = 0; i < 3; ++i) {
    if (!same_angle(t1.targets[i], t2.targets[i])) fail(ErrorCode::MismatchedFraming, "target angles differ");
  }
  FramedRelation r;
  std::array<int, 3> diff{};
  for (int i = 0; i < 3; ++i) {
    AngleValue d = t1.angles[i] - t2.angles[i];
    if (same_angle(d, pi_k(0))) {
      diff[i] = 0;
    } else if (same_angle(d, pi_k(1))) {
      diff[i] = 1;
    } else if (same_angle(d, pi_k(-1))) {
      diff[i] = -1;
    } else {
      fail(ErrorCode::MismatchedFraming, "angle difference is not a multiple of pi in {-1, 0, 1}");
    }
  }
  int plus = 0, minus = 0;
  for (int i = 0; i < 3; ++i) {
    if (diff[i] == 1) {
      ++plus;
      r.plus_slot = i;
    }
    if (diff[i] == -1) {
      ++minus;
      r.minus_slot = i;
    }
  }
  if (plus == 0 && minus == 0) return r;
  if (plus != 1 || minus != 1) fail(ErrorCode::MismatchedFraming, "angle difference is not (pi, -pi, 0) up to permutation");
  r.equal = false;
  return r;
}

FramedTriple holonomy_of(const RealizedImmersion& r) {
  return {to_elliptic_triple(r.configuration), r.vertices};
}

RealizedImmersion atomic_from_framed(const FramedTriple& t) {
  const auto& f = t.framing;
  if (chordal_distance(f[0], f[1]) < geom_tol() && chordal_distance(f[1], f[2]) < geom_tol()) {
    fail(ErrorCode::PathologicalFraming, "all framing points coincide");
  }
  CircleConfiguration cfg = from_elliptic_triple(t.triple);
  TargetDescriptor target = target_from_vertices(cfg, f);
  std::array<AngleValue, 3> theta = vertex_angles(cfg, f);
  std::array<AngleValue, 3> measured = measured_target_angles(target);
  static constexpr std::array<std::array<int, 3>, 7> shifts{
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  for (const auto& k : shifts) {
    std::array<AngleValue, 3> cand;
    for (int i = 0; i < 3; ++i) cand[i] = theta[i] + pi_k(k[i]).to_float();
    AtomicImmersion a;
    try {
      a = atomic_classify(cand);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OutOfRange || e.code() == ErrorCode::NotAtomic) continue;
      throw;
    }
    if (a.kind != cfg.kind() || a.signs != target.signs || a.star != target.star) continue;
    bool ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && std::abs(a.targets[i].radians() - measured[i].radians()) < 1e-6;
    if (ok) return {a, cfg, f};
  }
  fail(ErrorCode::Internal, "no atomic immersion realizes the framed triple");
}

}  // namespace cp1graft
