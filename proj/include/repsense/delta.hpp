#pragma once

#include <cstdint>
#include <vector>

#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense {

struct SubstrTable {
  std::vector<std::int64_t> counts;  // counts[k-1] = Substr(T, k)
  Rational delta;
  std::size_t argmax_k = 0;  // smallest maximizer

  std::int64_t count(std::size_t k) const { return counts.at(k - 1); }
};

SubstrTable substr_table(const Text& t);
Rational delta(const Text& t);

struct DeltaFamilyCheck {
  int m = 0;
  Rational delta_t;
  Rational delta_t_edited;
  Rational bound;  // (9m+2)/(3m+1)
  bool ok = false;
};

// deletion family (abb)^m a (bba)^{m+1} a^{3m} (bba)^m, T[3m+1] removed
DeltaFamilyCheck delta_family_check(int m);

}  // namespace repsense
