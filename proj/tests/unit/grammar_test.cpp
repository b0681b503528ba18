#include <doctest.h>

#include "repsense/gcis.hpp"
#include "repsense/sensitivity.hpp"
#include "repsense/slp.hpp"

using namespace repsense;

TEST_CASE("bisection expands to its text") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : all_strings(n, 3, true)) {
      auto g = bisection(t);
      CHECK(slp_expand(g) == t);
      CHECK(g.size() == g_bsc(t));
    }
}

TEST_CASE("unary powers of two") {
  // a^(2^k) takes k doublings above the leaf: 2k+1; a^(2^(k-1)) gives the family's 2k-1
  for (int k = 1; k <= 8; ++k) {
    CHECK(g_bsc(Text(std::vector<Symbol>(std::size_t(1) << k, 0))) == std::size_t(2 * k + 1));
    CHECK(g_bsc(Text(std::vector<Symbol>(std::size_t(1) << (k - 1), 0))) == std::size_t(2 * k - 1));
  }
}

TEST_CASE("splice_grammar: correct expansion, at most twice the size") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (auto& t : all_strings(n, 2, true)) {
      auto g = bisection(t);
      for (auto k : {EditKind::Sub, EditKind::Ins, EditKind::Del})
        for (auto& e : enumerate_edits(t, k)) {
          Text te = apply_edit(t, e);
          if (te.empty()) continue;
          auto s = splice_grammar(g, e);
          CHECK(slp_expand(s) == te);
          CHECK(s.size() <= 2 * g.size());
        }
    }
}

TEST_CASE("GCIS worked example") {
  Text t = Text::from_tokens("2 1 1 2 1 2 1 1 2 1 2 1 1 2 1 2");
  auto g = gcis_build(t);
  CHECK(g.size == 13);
  CHECK(g_is(t) == 13);
  CHECK(slp_expand(g.to_slp()) == t);
}

TEST_CASE("GCIS grammars expand to their text") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : all_strings(n, 3, false)) CHECK(slp_expand(gcis_build(t).to_slp()) == t);
}

TEST_CASE("LS types and LMS positions") {
  // S$ = 2 1 1 2 $ : types L S S L S
  auto ty = classify_ls(Text{2, 1, 1, 2});
  std::string s;
  for (auto x : ty) s += char(x);
  CHECK(s == "LSSLS");
  CHECK(lms_positions(Text{2, 1, 1, 2}) == std::vector<std::size_t>{1, 2, 5});
}
