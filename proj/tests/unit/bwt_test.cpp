#include <doctest.h>

#include "repsense/bwt.hpp"

using namespace repsense;

namespace {
// sort every rotation, read the last column
Text naive_bwt(const Text& t) {
  std::vector<std::vector<Symbol>> rot;
  auto v = t.symbols();
  for (std::size_t i = 0; i < v.size(); ++i) {
    rot.push_back(v);
    std::rotate(v.begin(), v.begin() + 1, v.end());
  }
  std::sort(rot.begin(), rot.end());
  std::vector<Symbol> out;
  for (auto& r : rot) out.push_back(r.back());
  return Text(out);
}
}  // namespace

TEST_CASE("worked example") {
  auto r = bwt(Text::from_bytes("abbaabababab"));
  CHECK(r.bwt == Text::from_bytes("babbbbbaaaaa"));
  CHECK(r.r == 4);
}

TEST_CASE("matches rotation sorting") {
  for (auto s : {"banana", "abracadabra", "aaaa", "ab", "a", "mississippi", "abaabababababab"}) {
    Text t = Text::from_bytes(s);
    CHECK(bwt(t).bwt == naive_bwt(t));
    CHECK(bwt_runs(t) == count_runs(naive_bwt(t)));
  }
}

TEST_CASE("reversed Fibonacci words have two runs") {
  CHECK(reversed_fibonacci(5) == Text{1, 0, 0, 1, 0});  // F_5 = abaab
  for (int k = 4; k <= 18; ++k) CHECK(bwt_runs(reversed_fibonacci(k)) == 2);
}
