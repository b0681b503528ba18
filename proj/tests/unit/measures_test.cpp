#include <doctest.h>

#include "repsense/measures.hpp"
#include "repsense/table.hpp"

using namespace repsense;

TEST_CASE("registry") {
  CHECK(measures().size() == 14);
  CHECK(measure_info("z77sr").order_insensitive);
  CHECK_FALSE(measure_info("r").order_insensitive);
  CHECK_FALSE(measure_info("gis").order_insensitive);
  CHECK(measure_info("gamma").cost == CostClass::Exponential);
  CHECK_THROWS_WITH_AS(measure_info("zes"), doctest::Contains("zss"), Error);
}

TEST_CASE("worked examples through the registry") {
  Text t = Text::from_bytes("abaabababababab$");
  CHECK(evaluate("z77", t).value == Rational(6));
  CHECK(evaluate("z77sr", t).value == Rational(5));
  CHECK(evaluate("z78", t).value == Rational(8));
  CHECK(evaluate("zend", t).value == Rational(6));
  Text u = Text::from_bytes("abaabababababab");
  CHECK(evaluate("zss", u).value == Rational(7));
  CHECK(evaluate("zsssr", u).value == Rational(5));
  CHECK(evaluate("r", Text::from_bytes("abbaabababab")).value == Rational(4));
  CHECK(evaluate("b", Text::from_bytes("abaabababbbba")).value == Rational(6));
  CHECK(evaluate("gis", Text::from_tokens("2 1 1 2 1 2 1 1 2 1 2 1 1 2 1 2")).value == Rational(13));
}

TEST_CASE("limits") {
  auto l = Limits::parse("gamma=20,b=12,e=5000,gamma_budget=1000,b_budget=0");
  CHECK(l.gamma_max_n == 20);
  CHECK(l.b_max_n == 12);
  CHECK(l.e_max_n == 5000);
  CHECK(l.gamma_budget == 1000u);
  CHECK_FALSE(l.b_budget.has_value());
  CHECK(Limits::parse(l.str()).str() == l.str());
  CHECK_THROWS_AS(Limits::parse("gamma=0"), Error);
  CHECK_THROWS_AS(Limits::parse("delta=3"), Error);
  CHECK_THROWS_AS(Limits::parse("gamma"), Error);
  CHECK(Limits::parse("b=4", l).gamma_max_n == 20);
}

TEST_CASE("over the cap: flagged, with an upper bound") {
  Limits l;
  l.gamma_max_n = 4;
  l.b_max_n = 4;
  Text t = Text::from_bytes("abaabab");
  auto g = evaluate("gamma", t, l);
  CHECK_FALSE(g.conclusive);
  CHECK(g.value >= evaluate("gamma", t).value);
  auto b = evaluate("b", t, l);
  CHECK_FALSE(b.conclusive);
  CHECK(b.value >= evaluate("b", t).value);
}

TEST_CASE("table rows come in a fixed order") {
  TableOptions o;
  o.sweep = false;
  auto a = emit_table(o);
  auto b = emit_table(o);
  CHECK(a == b);
  REQUIRE_FALSE(a.empty());
  CHECK(a.front().measure == "delta");
  CHECK(a.back().measure == "e");
  o.measures = {"z77"};
  auto z = emit_table(o);
  REQUIRE(z.size() == 3);
  CHECK(*z[0].lower_ms == Rational(15, 8));  // lz77-q, p = 8
  CHECK(*z[1].lower_ms == Rational(15, 8));
  CHECK(*z[2].lower_ms == Rational(14, 8));
  CHECK_THROWS_AS(emit_table(TableOptions{{"zzz"}}), Error);
}
