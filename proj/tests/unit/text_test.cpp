#include <doctest.h>

#include "repsense/rational.hpp"
#include "repsense/text.hpp"

using namespace repsense;

TEST_CASE("byte and token input") {
  CHECK(Text::from_bytes("ab$").symbols() == std::vector<Symbol>{97, 98, 36});
  CHECK(Text::from_tokens(" 3 0\n12 ").symbols() == std::vector<Symbol>{3, 0, 12});
  CHECK_THROWS_AS(Text::from_tokens("1 -2"), Error);
  CHECK_THROWS_AS(Text::from_tokens("1 x"), Error);
  CHECK(Text::from_tokens("").empty());
}

TEST_CASE("edits are 1-based and insertion lands at pos") {
  Text t{0, 1, 2};
  CHECK(apply_edit(t, EditOp::sub(2, 5)) == Text{0, 5, 2});
  CHECK(apply_edit(t, EditOp::ins(1, 7)) == Text{7, 0, 1, 2});
  CHECK(apply_edit(t, EditOp::ins(4, 7)) == Text{0, 1, 2, 7});
  CHECK(apply_edit(t, EditOp::del(3)) == Text{0, 1});
  CHECK_THROWS_AS(apply_edit(t, EditOp::sub(2, 1)), Error);  // no-op substitution
  CHECK_THROWS_AS(apply_edit(t, EditOp::del(4)), Error);
  CHECK_THROWS_AS(apply_edit(t, EditOp::ins(5, 0)), Error);
}

TEST_CASE("inverse edits round trip") {
  Text t{0, 1, 1, 0, 2};
  for (auto k : {EditKind::Sub, EditKind::Ins, EditKind::Del})
    for (auto& e : enumerate_edits(t, k)) {
      Text te = apply_edit(t, e);
      CHECK(apply_edit(te, inverse_edit(t, e)) == t);
    }
}

TEST_CASE("edit enumeration order and counts") {
  Text t{0, 1};
  auto subs = enumerate_edits(t, EditKind::Sub);  // alphabet {0,1} plus fresh 2
  REQUIRE(subs.size() == 4);
  CHECK(subs[0] == EditOp::sub(1, 1));
  CHECK(subs[1] == EditOp::sub(1, 2));
  CHECK(subs[2] == EditOp::sub(2, 0));
  CHECK(enumerate_edits(t, EditKind::Ins).size() == 9);
  CHECK(enumerate_edits(t, EditKind::Del).size() == 2);
  CHECK(enumerate_edits(t, EditKind::Ins, AlphabetPolicy::fixed({0})).size() == 3);
  CHECK(enumerate_edits(t, EditKind::Sub, AlphabetPolicy::extend_by_fresh(0)).size() == 2);
  CHECK(AlphabetPolicy::extend_by_fresh(2).symbols_for(Text{4, 1}) == std::vector<Symbol>{1, 4, 5, 6});
}

TEST_CASE("canonical form renames by first occurrence") {
  CHECK(canonicalize(Text{7, 3, 7, 9}) == Text{0, 1, 0, 2});
  CHECK(canonicalize(canonicalize(Text{5, 5, 1})) == canonicalize(Text{5, 5, 1}));
}

TEST_CASE("edit kinds parse") {
  CHECK(parse_edit_kind("ins") == EditKind::Ins);
  CHECK_THROWS_AS(parse_edit_kind("swap"), Error);
  CHECK(EditOp::ins(3, 1).str() == "ins@3:1");
  CHECK(EditOp::del(2).str() == "del@2");
}

TEST_CASE("rationals stay reduced") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(29, 10) > Rational(2));
  CHECK_THROWS(Rational(1, 0));
}
