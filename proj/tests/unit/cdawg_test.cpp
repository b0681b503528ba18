#include <doctest.h>

#include <set>

#include "repsense/cdawg.hpp"
#include "repsense/sensitivity.hpp"

using namespace repsense;

namespace {
// maximal repeats by definition: occurs twice, and every one-symbol extension on either side
// occurs less often (text boundaries count as distinct contexts)
std::size_t naive_e(const Text& t) {
  const auto& v = t.symbols();
  std::size_t n = v.size();
  std::set<Symbol> alpha(v.begin(), v.end());
  std::size_t e = alpha.size();
  std::set<std::vector<Symbol>> seen;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 1; i + l <= n; ++l) {
      std::vector<Symbol> w(v.begin() + i, v.begin() + i + l);
      if (!seen.insert(w).second) continue;
      std::set<Symbol> left, right;
      std::size_t occ = 0;
      bool left_edge = false, right_edge = false;
      for (std::size_t j = 0; j + l <= n; ++j)
        if (std::equal(w.begin(), w.end(), v.begin() + j)) {
          ++occ;
          if (j == 0) left_edge = true; else left.insert(v[j - 1]);
          if (j + l == n) right_edge = true; else right.insert(v[j + l]);
        }
      bool left_max = left_edge || left.size() >= 2;
      bool right_max = right_edge || right.size() >= 2;
      if (occ >= 2 && left_max && right_max) e += right.size();
    }
  return e;
}
}  // namespace

TEST_CASE("calibration strings") {
  for (std::size_t m = 1; m <= 8; ++m) {
    std::vector<Symbol> v(m, 0);
    v.push_back(1);
    v.insert(v.end(), m, 0);
    v.push_back(1);
    CHECK(cdawg_e(Text(v)) == 2 * m + 1);
    std::vector<Symbol> w(2 * m, 0);
    w.push_back(1);
    CHECK(cdawg_e(Text(w)) == 4 * m);
  }
}

TEST_CASE("edge count matches the maximal-repeat definition") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : all_strings(n, 3, true)) CHECK(cdawg_e(t) == naive_e(t));
}
