#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cp1graft/angle.hpp"
#include "cp1graft/configurations.hpp"

namespace cp1graft {

// Range of one angle in a table row.
enum class AngleRange { Small, Mid, High };  // (0,pi), (pi,2pi), (2pi,3pi)

enum class Relation { Less, Greater, Equal };

struct TableCondition {
  PiLinearForm form;
  Relation rel;
};

// One row of the atomic-immersion tables as printed.
struct AtomicTableRow {
  std::string id;
  std::array<AngleRange, 3> ranges;
  std::vector<TableCondition> conditions;
  ConfigKind kind;
  std::array<PiLinearForm, 3> targets;
  std::array<int, 3> signs;  // +1 / -1
  bool star = false;
  std::string figure;
  std::array<AngleValue, 3> sample;
};

// All 39 rows, parsed once from the embedded data file.
const std::vector<AtomicTableRow>& atomic_table();
const AtomicTableRow& table_row(std::string_view id);
// The raw embedded JSON document.
std::string_view atomic_table_source();

// Whether the row's ranges and conditions hold for the angles. Sets
// *banded when a float decision fell inside the eps*pi band.
bool row_matches(const AtomicTableRow& row, const std::array<AngleValue, 3>& angles, bool* banded = nullptr);

// Every row whose ranges and conditions hold.
std::vector<const AtomicTableRow*> matching_rows(const std::array<AngleValue, 3>& angles);

}  // namespace cp1graft
