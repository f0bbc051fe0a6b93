#include "cp1graft/json_io.hpp"

#include "cp1graft/errors.hpp"

namespace cp1graft::io {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::SchemaError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing member '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& array_of(const json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) schema(std::string(what) + " must be an array of " + std::to_string(n));
  return j;
}

ConfigKind kind_from(const json& j) {
  if (!j.is_string()) schema("kind must be a string");
  const auto s = j.get<std::string>();
  for (ConfigKind k : {ConfigKind::Euclidean, ConfigKind::Spherical, ConfigKind::Hyperbolic}) {
    if (s == to_string(k)) return k;
  }
  schema("unknown kind '" + s + "'");
}

Reroute reroute_from(const json& j) {
  if (!j.is_string()) schema("reroute must be a string");
  const auto s = j.get<std::string>();
  for (Reroute r : {Reroute::None, Reroute::CoreToEuclidean, Reroute::EdgeToEuclidean}) {
    if (s == to_string(r)) return r;
  }
  schema("unknown reroute '" + s + "'");
}

}  // namespace

json document(const std::string& type) { return json{{"schema", kSchema}, {"type", type}}; }

std::string document_type(const json& doc) {
  const json& s = member(doc, "schema");
  if (!s.is_string() || s.get<std::string>() != kSchema) schema(std::string("schema must be '") + kSchema + "'");
  const json& t = member(doc, "type");
  if (!t.is_string()) schema("type must be a string");
  return t.get<std::string>();
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  array_of(j, 2, "complex number");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json to_json(const RiemannPoint& p) { return json{{"z1", to_json(p.z1())}, {"z2", to_json(p.z2())}}; }

RiemannPoint point_from_json(const json& j) {
  return RiemannPoint(complex_from_json(member(j, "z1")), complex_from_json(member(j, "z2")));
}

json to_json(const Circle& c) { return json{{"A", c.A()}, {"B", to_json(c.B())}, {"C", c.C()}}; }

Circle circle_from_json(const json& j) {
  return Circle(number(member(j, "A"), "A"), complex_from_json(member(j, "B")), number(member(j, "C"), "C"));
}

json to_json(const MobiusMap& m) {
  return json::array({json::array({to_json(m.a()), to_json(m.b())}), json::array({to_json(m.c()), to_json(m.d())})});
}

MobiusMap map_from_json(const json& j) {
  array_of(j, 2, "matrix");
  array_of(j[0], 2, "matrix row");
  array_of(j[1], 2, "matrix row");
  return MobiusMap(complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
                   complex_from_json(j[1][1]));
}

json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const AngleValue& a) { return a.str(); }

AngleValue angle_from_json(const json& j) {
  if (j.is_string()) return parse_angle(j.get<std::string>());
  if (j.is_number()) return AngleValue::from_radians(j.get<double>());
  schema("angle must be a string or a number");
}

json to_json(const CircleConfiguration& cfg) {
  json circles = json::array(), pairs = json::array();
  for (const Circle& c : cfg.circles()) circles.push_back(to_json(c));
  for (int s = 0; s < 3; ++s) {
    const PairIntersection& p = cfg.pair(static_cast<PairSlot>(s));
    pairs.push_back(json::array({to_json(p.x), to_json(p.y)}));
  }
  json out{{"circles", circles}, {"kind", to_string(cfg.kind())}, {"pairs", pairs}};
  if (cfg.common_point()) out["common_point"] = to_json(*cfg.common_point());
  return out;
}

CircleConfiguration configuration_from_json(const json& j) {
  const json& c = array_of(member(j, "circles"), 3, "circles");
  CircleConfiguration cfg =
      build_configuration(circle_from_json(c[0]), circle_from_json(c[1]), circle_from_json(c[2]));
  auto it = j.find("kind");
  if (it != j.end() && kind_from(*it) != cfg.kind()) schema("member 'kind' disagrees with the circles");
  return cfg;
}

json to_json(const AtomicImmersion& a) {
  json angles = json::array(), targets = json::array(), forms = json::array();
  for (int i = 0; i < 3; ++i) {
    angles.push_back(to_json(a.angles[i]));
    targets.push_back(to_json(a.targets[i]));
    forms.push_back(a.target_forms[i].str());
  }
  return json{{"angles", angles},       {"kind", to_string(a.kind)},  {"targets", targets},
              {"target_forms", forms},  {"signs", signs_str(a.signs, a.star)}, {"table_row", a.table_row},
              {"big_slot", a.big_slot}, {"banded", a.banded}};
}

AtomicImmersion atomic_from_json(const json& j) {
  const json& angles = array_of(member(j, "angles"), 3, "angles");
  AtomicImmersion a = atomic_classify(angle_from_json(angles[0]), angle_from_json(angles[1]), angle_from_json(angles[2]));
  auto check = [&](const char* key, const json& expected) {
    auto it = j.find(key);
    if (it != j.end() && *it != expected) schema(std::string("member '") + key + "' disagrees with the angles");
  };
  json canonical = to_json(a);
  for (const char* key : {"kind", "targets", "target_forms", "signs", "table_row", "big_slot"}) check(key, canonical[key]);
  return a;
}

json to_json(const RealizedImmersion& r) {
  json vertices = json::array();
  for (const auto& v : r.vertices) vertices.push_back(to_json(v));
  return json{{"atomic", to_json(r.atomic)}, {"configuration", to_json(r.configuration)}, {"vertices", vertices}};
}

RealizedImmersion realized_from_json(const json& j) {
  AtomicImmersion a = atomic_from_json(member(j, "atomic"));
  CircleConfiguration cfg = configuration_from_json(member(j, "configuration"));
  const json& v = array_of(member(j, "vertices"), 3, "vertices");
  return {a, cfg, {point_from_json(v[0]), point_from_json(v[1]), point_from_json(v[2])}};
}

json to_json(const GraftingMultiCurve& m) {
  return json{{"G_ab", m.edge[kPair12]}, {"G_bc", m.edge[kPair23]}, {"G_ac", m.edge[kPair13]},
              {"G_a", m.core[0]},        {"G_b", m.core[1]},        {"G_c", m.core[2]}};
}

GraftingMultiCurve curve_from_json(const json& j) {
  GraftingMultiCurve m;
  m.edge[kPair12] = integer(member(j, "G_ab"), "G_ab");
  m.edge[kPair23] = integer(member(j, "G_bc"), "G_bc");
  m.edge[kPair13] = integer(member(j, "G_ac"), "G_ac");
  m.core[0] = integer(member(j, "G_a"), "G_a");
  m.core[1] = integer(member(j, "G_b"), "G_b");
  m.core[2] = integer(member(j, "G_c"), "G_c");
  for (int i = 0; i < 3; ++i) {
    if (m.edge[i] < 0 || m.core[i] < 0) schema("multiplicities must be non-negative");
  }
  return m;
}

json to_json(const Decomposition& d) {
  return json{{"relabel", d.relabel},
              {"atomic", to_json(d.atomic)},
              {"curve", to_json(d.curve)},
              {"unadjusted_curve", to_json(d.unadjusted_curve)},
              {"k", d.k},
              {"reroute", to_string(d.reroute)},
              {"perturbation", d.perturbation_flag},
              {"banded", d.banded}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  const json& rl = array_of(member(j, "relabel"), 3, "relabel");
  const json& k = array_of(member(j, "k"), 3, "k");
  for (int i = 0; i < 3; ++i) {
    d.relabel[i] = static_cast<int>(integer(rl[i], "relabel entry"));
    d.k[i] = integer(k[i], "k entry");
  }
  d.atomic = atomic_from_json(member(j, "atomic"));
  d.curve = curve_from_json(member(j, "curve"));
  d.unadjusted_curve = curve_from_json(member(j, "unadjusted_curve"));
  d.reroute = reroute_from(member(j, "reroute"));
  const json& p = member(j, "perturbation");
  const json& b = member(j, "banded");
  if (!p.is_boolean() || !b.is_boolean()) schema("perturbation and banded must be booleans");
  d.perturbation_flag = p.get<bool>();
  d.banded = b.get<bool>();
  return d;
}

json to_json(const MonodromyResult& r) {
  json m = json::array(), tr2 = json::array();
  for (int i = 0; i < 3; ++i) {
    m.push_back(to_json(r.m[i]));
    tr2.push_back(to_json(r.trace_squared[i]));
  }
  return json{{"matrices", m},
              {"trace_squared", tr2},
              {"product_residual", r.product_residual},
              {"wronskian_drift", r.wronskian_drift}};
}

}  // namespace cp1graft::io
