#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "repsense/text.hpp"

namespace repsense {

enum class LzVariant { LZ77, LZ77sr, LZSS, LZSSsr, LZ78, LZEnd };

const char* to_string(LzVariant v);
LzVariant parse_lz_variant(std::string_view s);

struct Factor {
  enum class Kind { Literal, Reference, Lz78Pair };
  std::size_t start = 0;  // 1-based
  std::size_t len = 0;
  Kind kind = Kind::Literal;
  std::size_t src = 0;     // 1-based start of the copied part, 0 if nothing is copied
  std::size_t copy = 0;    // copied prefix length; len - copy is 0 or 1
  Symbol sym = -1;         // trailing explicit symbol, -1 when absent
  std::size_t parent = 0;  // LZ78 only: index of the extended factor, 0 = empty
};

struct Factorization {
  LzVariant variant = LzVariant::LZ77;
  std::vector<Factor> factors;

  std::size_t z() const { return factors.size(); }
  Text reconstruct() const;
  std::string render(const Text& t) const;  // factors joined by '|'
};

Factorization lz77(const Text& t);
Factorization lz77sr(const Text& t);
Factorization lzss(const Text& t);
Factorization lzsssr(const Text& t);
Factorization lz78(const Text& t);
Factorization lzend(const Text& t);
Factorization factorize(const Text& t, LzVariant v);

// size only; same parse, fewer allocations
std::size_t lz_size(const Text& t, LzVariant v);

}  // namespace repsense
