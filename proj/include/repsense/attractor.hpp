#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "repsense/text.hpp"

namespace repsense {

// 1-based ascending positions
using Positions = std::vector<std::size_t>;

bool is_attractor(const Text& t, const Positions& gamma);

struct GammaResult {
  bool conclusive = false;
  std::size_t gamma = 0;  // when inconclusive: best size found so far (an upper bound)
  Positions witness;
  std::uint64_t nodes = 0;
};

// exact smallest attractor by branch and bound on a hitting set;
// budget caps the number of search nodes
GammaResult gamma_exact(const Text& t, std::optional<std::uint64_t> budget = std::nullopt,
                        std::size_t max_n = 24);

}  // namespace repsense
