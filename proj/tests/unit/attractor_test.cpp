#include <doctest.h>

#include "oracles.hpp"
#include "repsense/attractor.hpp"
#include "repsense/families.hpp"
#include "repsense/sensitivity.hpp"

using namespace repsense;

TEST_CASE("attractor predicate agrees with the reference") {
  Text t = Text::from_bytes("abaab");
  for (unsigned mask = 0; mask < 32; ++mask) {
    Positions p;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask >> i & 1) p.push_back(i + 1);
    CHECK(is_attractor(t, p) == oracle::is_attractor(t.symbols(), p));
  }
}

TEST_CASE("exact gamma is minimal, n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto& t : all_strings(n, 3, true)) {
      auto g = gamma_exact(t);
      REQUIRE(g.conclusive);
      CHECK(g.gamma == g.witness.size());
      CHECK(oracle::is_attractor(t.symbols(), g.witness));
      CHECK(g.gamma == oracle::gamma(t.symbols()));
    }
}

TEST_CASE("gamma family: witnesses of the stated sizes") {
  for (int k = 1; k <= 3; ++k) {
    auto inst = families::generate("gamma-sub", {{"k", k}});
    auto g = gamma_exact(inst.t, std::nullopt, 40);
    REQUIRE(g.conclusive);
    CHECK(g.gamma == std::size_t(k + 2));
    CHECK(oracle::is_attractor(inst.t.symbols(), g.witness));
    auto ge = gamma_exact(inst.t_edited(), std::nullopt, 40);
    CHECK(ge.gamma == std::size_t(2 * k + 2));
  }
}

TEST_CASE("gamma insertion family: the unique prefix a^k x needs its own position") {
  // one position per sentinel, for b, for [1,k+1], for [k+3,2k+3] and per block
  for (int k = 1; k <= 3; ++k) {
    auto inst = families::generate("gamma-ins", {{"k", k}});
    auto ge = gamma_exact(inst.t_edited(), std::nullopt, 40);
    REQUIRE(ge.conclusive);
    CHECK(ge.gamma == std::size_t(2 * k + 3));
    CHECK(std::any_of(ge.witness.begin(), ge.witness.end(), [&](auto p) { return p <= std::size_t(k + 1); }));
  }
}

TEST_CASE("limits make gamma inconclusive rather than wrong") {
  Text t = Text::from_bytes("abaababaabaab");
  CHECK_THROWS(gamma_exact(t, std::nullopt, 8));
  auto g = gamma_exact(t, 1);
  if (!g.conclusive) CHECK(g.gamma >= gamma_exact(t).gamma);
}
