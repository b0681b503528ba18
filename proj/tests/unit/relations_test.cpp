#include <doctest.h>

#include "repsense/relations.hpp"

using namespace repsense;

namespace {
const RelationResult& find(const RelationReport& r, const std::string& name) {
  for (auto& x : r.results)
    if (x.name == name) return x;
  throw std::runtime_error("missing relation " + name);
}
}  // namespace

TEST_CASE("unary text") {
  auto r = check_relations(Text(std::vector<Symbol>(6, 0)));
  CHECK(find(r, "delta <= gamma").lhs_value == Rational(1));
  CHECK(find(r, "delta <= gamma").rhs_value == Rational(1));
  CHECK(find(r, "gamma <= zsssr").rhs_value == Rational(2));
  CHECK(r.ok());
}

TEST_CASE("worked example text") {
  auto r = check_relations(Text::from_bytes("abaabababababab$"));
  CHECK(find(r, "zsssr <= zend").rhs_value == Rational(6));
  CHECK(find(r, "z77sr <= z77").lhs_value == Rational(5));
  CHECK(find(r, "z77sr <= z77").status == RelationStatus::Pass);
}

TEST_CASE("zsssr <= zend fails on 001") {
  // LZSSsr 0|0|1 against LZ-End 0|01
  auto r = check_relations(Text{0, 0, 1});
  CHECK(find(r, "zsssr <= zend").status == RelationStatus::Fail);
  CHECK_FALSE(r.ok());
}

TEST_CASE("gamma beyond its cap is skipped, not failed") {
  Limits lim;
  lim.gamma_max_n = 4;
  auto r = check_relations(Text::from_bytes("abcabcab"), lim);
  CHECK(find(r, "delta <= gamma").status == RelationStatus::Skipped);
  CHECK(find(r, "gamma <= e").status == RelationStatus::Skipped);
  CHECK(find(r, "zss <= gis").status == RelationStatus::Pass);
}

TEST_CASE("squeeze text is informational") {
  auto s = squeeze_report({"delta", "r", Rational(2), Rational(4), 1024});
  CHECK_FALSE(s.empty());
  CHECK(s.find("1024") != std::string::npos);
}
