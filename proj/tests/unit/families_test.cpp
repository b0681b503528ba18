#include <doctest.h>

#include <set>

#include "repsense/families.hpp"

using namespace repsense;
using namespace repsense::families;

TEST_CASE("every family honours its closed-form length at its defaults") {
  for (auto& info : catalog()) {
    auto inst = generate(info.id);
    CAPTURE(info.id);
    CHECK(inst.t.size() == inst.closed_form_length);
    CHECK(edit_valid(inst.t, inst.edit));
    CHECK_FALSE(inst.expected.empty());
    CHECK_FALSE(inst.layout.empty());
  }
}

TEST_CASE("lengths across parameters") {
  for (int p = 2; p <= 8; ++p) {
    CHECK(generate("lz77-q-sub", {{"p", p}}).t.size() == (std::size_t(1) << p) - 1);
    CHECK(generate("lzss-sub", {{"p", p}}).t.size() == generate("lzss-sub", {{"p", p}}).closed_form_length);
  }
  for (int k = 1; k <= 6; ++k) CHECK(generate("gamma-del", {{"k", k}}).t.size() == std::size_t(k * k + 4 * k + 2));
}

TEST_CASE("unknown names and parameters are rejected with suggestions") {
  CHECK_THROWS_WITH_AS(generate("lz77-q-sbu"), doctest::Contains("lz77-q-sub"), Error);
  CHECK_THROWS_AS(generate("lz77-q-sub", {{"k", 3}}), Error);
  CHECK_THROWS_AS(generate("lz77-q-sub", {{"p", 0}}), Error);
}

TEST_CASE("the Q words of the z77 family") {
  // Q_1 = 0, Q_2 = 01, Q_3 = 0011
  CHECK(generate("lz77-q-sub", {{"p", 3}}).t == Text{0, 0, 1, 0, 0, 1, 1});
  auto del = generate("lz77-q-del", {{"p", 3}});
  CHECK(del.t_edited() == Text{0, 1, 0, 0, 1, 1});
}

TEST_CASE("LZ78 family bookkeeping") {
  CHECK(lz78_ell(1) == 1);
  CHECK(lz78_ell(2) == 2);
  CHECK(lz78_ell(3) == 2);
  CHECK(lz78_ell(4) == 3);
  CHECK(lz78_ell(6) == 3);
  CHECK(lz78_ell(7) == 4);
  for (int k = 2; k <= 30; ++k)
    for (int j = 2; j <= k; ++j) {
      int l = lz78_ell(j), y = lz78_y(j, k);
      CHECK(y <= k);
      CHECK(((y - (2 + j + l - 1)) % l + l) % l == 0);
      CHECK(y + l > k);  // largest such value
    }
}

TEST_CASE("wrapped de Bruijn sequences hold every bigram once") {
  for (int s : {2, 3, 4}) {
    auto q = de_bruijn_wrapped(s);
    REQUIRE(q.size() == std::size_t(s * s + 1));
    std::set<std::pair<Symbol, Symbol>> bi;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) bi.insert({q[i], q[i + 1]});
    CHECK(bi.size() == std::size_t(s * s));
  }
}

TEST_CASE("verify reports pass and fail as data") {
  auto ok = verify(generate("gcis-sub", {{"p", 6}}));
  CHECK(ok.passed());
  REQUIRE(ok.results.size() == 2);
  CHECK(ok.results[0].actual == Rational(11));
  CHECK(ok.results[1].actual == Rational(31));

  auto inst = generate("lz77-q-sub", {{"p", 4}});
  inst.expected[0].value = 99;
  auto bad = verify(inst);
  CHECK_FALSE(bad.passed());
  CHECK(bad.conclusive());
}
