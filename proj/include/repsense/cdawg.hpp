#pragma once

#include <cstddef>
#include <vector>

#include "repsense/text.hpp"

namespace repsense {

struct MaximalRepeat {
  std::size_t pos = 0;  // 1-based, leftmost occurrence
  std::size_t len = 0;
  std::vector<Symbol> extensions;  // symbols c with w c occurring, ascending
};

struct MaximalRepeatSet {
  std::vector<MaximalRepeat> repeats;   // nonempty maximal repeats
  std::vector<Symbol> source_edges;     // the alphabet
  std::size_t v() const { return repeats.size(); }
  std::size_t e() const;
};

MaximalRepeatSet maximal_repeats(const Text& t, std::size_t max_n = 2000);
std::size_t cdawg_e(const Text& t, std::size_t max_n = 2000);

}  // namespace repsense
