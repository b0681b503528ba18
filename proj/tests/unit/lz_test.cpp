#include <doctest.h>

#include "oracles.hpp"
#include "repsense/lz.hpp"
#include "repsense/sensitivity.hpp"

using namespace repsense;

namespace {
std::vector<std::size_t> lens(const Factorization& f) {
  std::vector<std::size_t> v;
  for (auto& x : f.factors) v.push_back(x.len);
  return v;
}
}  // namespace

TEST_CASE("worked examples") {
  Text t = Text::from_bytes("abaabababababab$");
  CHECK(lz77(t).render(t) == "a|b|aa|bab|ababa|bab$");
  CHECK(lz77sr(t).render(t) == "a|b|aa|bab|abababab$");
  CHECK(lz78(t).render(t) == "a|b|aa|ba|bab|ab|aba|b$");
  CHECK(lzend(t).render(t) == "a|b|aa|ba|bab|ababab$");
  Text u = Text::from_bytes("abaabababababab");
  CHECK(lzss(u).render(u) == "a|b|a|aba|ba|baba|bab");
  CHECK(lzsssr(u).render(u) == "a|b|a|aba|babababab");
}

TEST_CASE("parsers agree with the definitional references, n <= 9, sigma 3") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (auto& t : all_strings(n, 3, true)) {
      const auto& v = t.symbols();
      CHECK(lens(lz77(t)) == oracle::lz77(v, false));
      CHECK(lens(lz77sr(t)) == oracle::lz77(v, true));
      CHECK(lens(lzss(t)) == oracle::lzss(v, false));
      CHECK(lens(lzsssr(t)) == oracle::lzss(v, true));
      CHECK(lens(lz78(t)) == oracle::lz78(v));
      CHECK(lens(lzend(t)) == oracle::lzend(v));
    }
}

TEST_CASE("factorizations decode back to the text") {
  for (auto& t : all_strings(8, 3, true))
    for (auto v : {LzVariant::LZ77, LzVariant::LZ77sr, LzVariant::LZSS, LzVariant::LZSSsr, LzVariant::LZ78,
                   LzVariant::LZEnd}) {
      auto f = factorize(t, v);
      CHECK(f.reconstruct() == t);
      CHECK(lz_size(t, v) == f.z());
    }
}

TEST_CASE("variant names") {
  CHECK(parse_lz_variant("zsssr") == LzVariant::LZSSsr);
  CHECK_THROWS_AS(parse_lz_variant("lz"), Error);
}
