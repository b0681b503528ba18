#include <doctest.h>

#include "oracles.hpp"
#include "repsense/delta.hpp"
#include "repsense/sensitivity.hpp"

using namespace repsense;

TEST_CASE("substring counts match set enumeration, n <= 9") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : all_strings(n, 3, true)) {
      auto st = substr_table(t);
      for (std::size_t k = 1; k <= n; ++k) CHECK(st.count(k) == oracle::substr_count(t.symbols(), k));
      CHECK(st.delta == oracle::delta(t.symbols()));
      CHECK(Rational(st.count(st.argmax_k), std::int64_t(st.argmax_k)) == st.delta);
    }
}

TEST_CASE("delta on small texts") {
  CHECK(delta(Text{0, 0, 0, 0}) == Rational(1));
  CHECK(delta(Text{0, 0, 0, 1}) == Rational(2));
  CHECK(delta(Text{0, 1, 2}) == Rational(3));
}

TEST_CASE("deletion family") {
  for (int m = 1; m <= 6; ++m) {
    auto c = delta_family_check(m);
    CHECK(c.delta_t == Rational(2));
    CHECK(c.delta_t_edited >= Rational(9 * m + 2, 3 * m + 1));
    CHECK(c.ok);
  }
}
