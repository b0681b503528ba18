#include <doctest.h>

#include <algorithm>
#include <set>

#include "repsense/families.hpp"
#include "repsense/sensitivity.hpp"

using namespace repsense;

TEST_CASE("delta on a unary text") {
  Text t(std::vector<Symbol>(7, 0));
  auto sub = sensitivity("delta", t, EditKind::Sub);
  CHECK(sub.as == Rational(1));
  CHECK(sub.ms == Rational(2));
  REQUIRE(sub.ms_witness);
  CHECK(*sub.ms_witness == EditOp::sub(1, 1));  // lowest position, then lowest symbol
  CHECK(apply_edit(t, *sub.ms_witness).symbols().front() == 1);
  auto del = sensitivity("delta", t, EditKind::Del);
  CHECK(del.as == Rational(0));
  CHECK(del.ms == Rational(1));
  CHECK(del.results.size() == 1);  // every deletion gives the same T'
}

TEST_CASE("z77 on the Q family") {
  for (int p = 2; p <= 6; ++p) {
    auto inst = families::generate("lz77-q-sub", {{"p", p}});
    auto rep = sensitivity("z77", inst.t, EditKind::Sub);
    CHECK(rep.base.value == Rational(p));
    CHECK(rep.as == Rational(p - 1));
    CHECK(rep.ms == Rational(2 * p - 1, p));
  }
}

TEST_CASE("witnesses attain the maxima") {
  Text t = Text::from_bytes("abaababa");
  for (auto k : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    auto rep = sensitivity("zss", t, k);
    for (auto& r : rep.results) {
      CHECK(r.ratio <= rep.ms);
      CHECK(r.value.value - rep.base.value <= rep.as);
    }
    auto v = evaluate("zss", apply_edit(t, *rep.ms_witness));
    CHECK(v.value / rep.base.value == rep.ms);
  }
}

TEST_CASE("results are deduplicated by T'") {
  auto rep = sensitivity("z78", Text{0, 0, 1}, EditKind::Ins, AlphabetPolicy::fixed({0, 1}));
  std::set<std::vector<Symbol>> seen;
  for (auto& r : rep.results) CHECK(seen.insert(apply_edit(Text{0, 0, 1}, r.edit).symbols()).second);
  CHECK(rep.results.size() == 5);  // 0001 0010 0011 1001 0101
}

TEST_CASE("symmetry: every deletion witness is undone by an insertion") {
  for (auto m : {"z77", "zss", "delta", "gis"}) {
    auto g = global_worst(m, 7, 2, EditKind::Del);
    Text te = apply_edit(g.as_text, g.as_edit);
    auto back = inverse_edit(g.as_text, g.as_edit);
    CHECK(back.kind == EditKind::Ins);
    CHECK(apply_edit(te, back) == g.as_text);
    auto ins = enumerate_edits(te, EditKind::Ins, AlphabetPolicy::extend_by_fresh(1));
    CHECK(std::find(ins.begin(), ins.end(), back) != ins.end());
  }
}

TEST_CASE("string enumeration") {
  CHECK(all_strings(3, 2, false).size() == 8);
  CHECK(all_strings(4, 3, true).size() == 14);  // restricted growth strings: 1+7+6
  CHECK(all_strings(3, 2, true).front() == Text{0, 0, 0});
}

TEST_CASE("global worst is independent of the thread count") {
  SweepOptions one, four;
  four.jobs = 4;
  for (auto k : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    CHECK(global_worst("zsssr", 8, 2, k, one) == global_worst("zsssr", 8, 2, k, four));
    CHECK(global_worst("r", 7, 2, k, one) == global_worst("r", 7, 2, k, four));
  }
}

TEST_CASE("sweep delta at n = 9: AS 1, MS 2") {
  auto g = global_worst("delta", 9, 2, EditKind::Sub);
  CHECK(g.as == Rational(1));
  CHECK(g.ms == Rational(2));
}
