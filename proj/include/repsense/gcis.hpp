#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "repsense/slp.hpp"
#include "repsense/text.hpp"

namespace repsense {

enum class LsType : char { L = 'L', S = 'S' };

// types of S$ (length n+1); $ is smaller than every symbol and has type S
std::vector<LsType> classify_ls(const Text& s);
// 1-based LMS positions of S$, always including 1 and n+1
std::vector<std::size_t> lms_positions(const Text& s);

struct GcisLevel {
  std::vector<std::vector<std::int64_t>> dict;  // distinct factors, lexicographic order
  std::vector<std::int64_t> labels;             // nonterminal label of each dict entry
  std::vector<std::int64_t> parsed;             // G_h
  std::size_t dict_length() const;              // ||D_h||
};

struct GcisGrammar {
  std::vector<std::int64_t> input;
  std::int64_t sigma = 0;  // distinct symbols of T plus the sentinel
  std::vector<GcisLevel> levels;
  std::size_t size = 0;  // sum of ||D_h|| plus |G_r|, or |T| with no level

  std::size_t height() const { return levels.size(); }
  const std::vector<std::int64_t>& final_string() const { return levels.empty() ? input : levels.back().parsed; }
  std::string dump() const;
  Slp to_slp() const;
};

GcisGrammar gcis_build(const Text& t);
std::size_t g_is(const Text& t);

}  // namespace repsense
