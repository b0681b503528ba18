#include <doctest.h>

#include "repsense/records.hpp"

using namespace repsense;

TEST_CASE("sensitivity reports round trip") {
  for (auto k : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    auto rep = sensitivity("z77", Text::from_bytes("abaab"), k);
    CHECK(records::parse_sensitivity(records::emit(rep)) == rep);
  }
  auto fixed = sensitivity("delta", Text{0, 1}, EditKind::Ins, AlphabetPolicy::fixed({0, 1, 5}));
  CHECK(records::parse_sensitivity(records::emit(fixed)) == fixed);
}

TEST_CASE("inconclusive values round trip") {
  Limits lim;
  lim.gamma_max_n = 3;
  auto rep = sensitivity("gamma", Text::from_bytes("abab"), EditKind::Sub, {}, lim);
  CHECK_FALSE(rep.conclusive());
  CHECK(records::parse_sensitivity(records::emit(rep)) == rep);
}

TEST_CASE("sweep, family, relation, measure and table records round trip") {
  auto g = global_worst("zss", 6, 2, EditKind::Ins);
  CHECK(records::parse_global_worst(records::emit(g)) == g);

  auto v = families::verify(families::generate("lzend-sub", {{"p", 3}}));
  CHECK(records::parse_verify(records::emit(v)) == v);

  auto r = check_relations(Text::from_bytes("abcab"));
  CHECK(records::parse_relations(records::emit(r)) == r);

  records::MeasureRecord m{"delta", Text{0, 0, 1}, {Rational(3, 2), true}};
  CHECK(records::parse_measure(records::emit(m)) == m);

  TableOptions o;
  o.measures = {"z77", "e"};
  o.sweep = false;
  auto rows = emit_table(o);
  CHECK(records::parse_table(records::emit(rows)) == rows);
}

TEST_CASE("one record per line, each typed") {
  auto rep = sensitivity("z78", Text{0, 1}, EditKind::Del);
  auto s = records::emit(rep);
  CHECK(std::count(s.begin(), s.end(), '\n') == 1 + std::ptrdiff_t(rep.results.size()));
  CHECK(s.rfind("{\"", 0) == 0);
  CHECK(s.find("\"type\":\"edit\"") != std::string::npos);
}

TEST_CASE("malformed records") {
  CHECK_THROWS(records::parse_sensitivity(""));
  CHECK_THROWS(records::parse_global_worst("{\"type\":\"edit\"}"));
  CHECK_THROWS_AS(records::parse_rational("1/x"), Error);
  CHECK(records::parse_rational("-6/4") == Rational(-3, 2));
}
