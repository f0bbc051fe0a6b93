#include "cp1graft/atomic_table.hpp"

#include "json.hpp"

#include "cp1graft/errors.hpp"

namespace cp1graft {

namespace detail {
std::string_view atomic_table_json();
}

namespace {

AngleRange parse_range(const std::string& s) {
  if (s == "small") return AngleRange::Small;
  if (s == "mid") return AngleRange::Mid;
  if (s == "high") return AngleRange::High;
  fail(ErrorCode::SchemaError, "unknown range '" + s + "'");
}

Relation parse_relation(const std::string& s) {
  if (s == "<") return Relation::Less;
  if (s == ">") return Relation::Greater;
  if (s == "=") return Relation::Equal;
  fail(ErrorCode::SchemaError, "unknown relation '" + s + "'");
}

ConfigKind parse_kind(const std::string& s) {
  if (s == "euclidean") return ConfigKind::Euclidean;
  if (s == "spherical") return ConfigKind::Spherical;
  if (s == "hyperbolic") return ConfigKind::Hyperbolic;
  fail(ErrorCode::SchemaError, "unknown kind '" + s + "'");
}

PiLinearForm parse_form(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) fail(ErrorCode::SchemaError, "linear form needs 4 coefficients");
  PiLinearForm f;
  for (int i = 0; i < 4; ++i) f.k[i] = j.at(i).get<std::int64_t>();
  return f;
}

std::vector<AtomicTableRow> load() {
  auto doc = nlohmann::json::parse(detail::atomic_table_json());
  std::vector<AtomicTableRow> rows;
  for (const auto& r : doc.at("rows")) {
    AtomicTableRow row;
    row.id = r.at("id").get<std::string>();
    for (int i = 0; i < 3; ++i) row.ranges[i] = parse_range(r.at("ranges").at(i).get<std::string>());
    for (const auto& c : r.at("conditions")) {
      row.conditions.push_back({parse_form(c.at("form")), parse_relation(c.at("rel").get<std::string>())});
    }
    row.kind = parse_kind(r.at("kind").get<std::string>());
    for (int i = 0; i < 3; ++i) row.targets[i] = parse_form(r.at("targets").at(i));
    const std::string signs = r.at("signs").get<std::string>();
    if (signs.size() != 3) fail(ErrorCode::SchemaError, "signs need 3 characters");
    for (int i = 0; i < 3; ++i) row.signs[i] = signs[i] == '+' ? 1 : -1;
    row.star = r.at("star").get<bool>();
    row.figure = r.at("figure").get<std::string>();
    for (int i = 0; i < 3; ++i) {
      RealValue q = parse_real(r.at("sample").at(i).get<std::string>());
      row.sample[i] = AngleValue::pi_times(*q.exact);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool in_range(const AngleValue& x, AngleRange r, bool* banded) {
  std::int64_t lo = r == AngleRange::Small ? 0 : (r == AngleRange::Mid ? 1 : 2);
  SignDecision above = compare(x, AngleValue::pi_fraction(lo));
  SignDecision below = compare(x, AngleValue::pi_fraction(lo + 1));
  if (banded) *banded = *banded || above.banded || below.banded;
  return above.sign > 0 && below.sign < 0;
}

}  // namespace

const std::vector<AtomicTableRow>& atomic_table() {
  static const std::vector<AtomicTableRow> rows = load();
  return rows;
}

const AtomicTableRow& table_row(std::string_view id) {
  for (const auto& r : atomic_table()) {
    if (r.id == id) return r;
  }
  fail(ErrorCode::SchemaError, "no table row '" + std::string(id) + "'");
}

std::string_view atomic_table_source() { return detail::atomic_table_json(); }

bool row_matches(const AtomicTableRow& row, const std::array<AngleValue, 3>& angles, bool* banded) {
  for (int i = 0; i < 3; ++i) {
    if (!in_range(angles[i], row.ranges[i], banded)) return false;
  }
  for (const auto& c : row.conditions) {
    SignDecision d = decide_sign(c.form.eval(angles));
    if (banded) *banded = *banded || d.banded;
    int want = c.rel == Relation::Less ? -1 : (c.rel == Relation::Greater ? 1 : 0);
    if (d.sign != want) return false;
  }
  return true;
}

std::vector<const AtomicTableRow*> matching_rows(const std::array<AngleValue, 3>& angles) {
  std::vector<const AtomicTableRow*> out;
  for (const auto& r : atomic_table()) {
    if (row_matches(r, angles)) out.push_back(&r);
  }
  return out;
}

}  // namespace cp1graft
