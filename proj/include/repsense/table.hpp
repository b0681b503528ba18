#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repsense/families.hpp"
#include "repsense/measures.hpp"
#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense {

// One (measure, edit kind) cell pair of the multiplicative sensitivity table.
// The published bounds are carried as annotations; the measured numbers come from a
// lower-bound instance and an exhaustive sweep.
struct TableRow {
  std::string measure;
  EditKind kind = EditKind::Sub;
  std::string paper_upper, paper_lower;

  // lower-bound evidence: C(T')/C(T) on a family instance, or the worst edit of a text
  std::string lower_source;  // "family", "text" or "" when there is none
  std::string lower_provenance;
  std::optional<Rational> lower_ms;
  bool lower_conclusive = true;

  // worst case over every string of length <= n
  std::string upper_provenance;
  std::optional<Rational> upper_ms, upper_as;
  bool upper_conclusive = true;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableOptions {
  std::vector<std::string> measures;  // empty = every row
  std::size_t n_cheap = 9;            // sweep length for polynomial measures
  std::size_t n_costly = 6;           // for gamma and b
  int sigma = 2;
  bool sweep = true;
  int jobs = 1;
  Limits limits = Limits::from_env();
};

// measures that have table rows, in row order
const std::vector<std::string>& table_measures();

std::vector<TableRow> emit_table(const TableOptions& opt = {});

}  // namespace repsense
