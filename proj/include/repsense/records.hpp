#pragma once

#include <string>
#include <string_view>

#include "repsense/families.hpp"
#include "repsense/relations.hpp"
#include "repsense/sensitivity.hpp"
#include "repsense/table.hpp"

namespace repsense::records {

// Line-delimited JSON. Every line carries a "type" field; rationals are "p/q" strings,
// texts are arrays of integers. A report may span several lines (a header, then items).
struct MeasureRecord {
  std::string measure;
  Text t;
  MeasureValue value;
  friend bool operator==(const MeasureRecord&, const MeasureRecord&) = default;
};

std::string emit(const MeasureRecord& m);
std::string emit(const std::vector<TableRow>& rows);
std::string emit(const SensitivityReport& r);
std::string emit(const GlobalWorst& g);
std::string emit(const families::VerifyReport& v);
std::string emit(const RelationReport& r);

MeasureRecord parse_measure(std::string_view s);
std::vector<TableRow> parse_table(std::string_view s);
SensitivityReport parse_sensitivity(std::string_view s);
GlobalWorst parse_global_worst(std::string_view s);
families::VerifyReport parse_verify(std::string_view s);
RelationReport parse_relations(std::string_view s);

Rational parse_rational(std::string_view s);

}  // namespace repsense::records
