#pragma once

#include <cstddef>

#include "repsense/text.hpp"

namespace repsense {

struct BwtResult {
  Text bwt;
  std::size_t r = 0;
};

// rotation BWT, no end marker
BwtResult bwt(const Text& t);
std::size_t bwt_runs(const Text& t);
std::size_t count_runs(const Text& t);

// reversal of F_k over {0 = a, 1 = b}; F_1 = b, F_2 = a, F_k = F_{k-1} F_{k-2}
Text reversed_fibonacci(int k);

}  // namespace repsense
