#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "repsense/text.hpp"

namespace repsense {

struct GSym {
  bool nt = false;  // nonterminal index when true, terminal symbol otherwise
  std::int32_t v = 0;

  static GSym term(Symbol c) { return {false, c}; }
  static GSym rule(std::size_t i) { return {true, std::int32_t(i)}; }
  friend bool operator==(const GSym&, const GSym&) = default;
};

struct Slp {
  std::vector<std::vector<GSym>> rules;
  std::size_t start = 0;

  std::size_t size() const;    // total right-hand side length
  std::size_t height() const;  // derivation tree height, terminals at depth 0
  std::string dump() const;    // one "X -> Y Z" line per rule
};

// throws on cyclic or dangling rules
Text slp_expand(const Slp& g);
std::vector<std::size_t> expansion_lengths(const Slp& g);
// removes rules unreachable from the start rule, renumbering the rest
Slp prune_unreachable(const Slp& g);

// left child of length 2^j, the largest 2^j < n; equal expansions share one rule.
// A leaf is a rule X -> a.
Slp bisection(const Text& t);
std::size_t g_bsc(const Text& t);
// number of distinct binary rules (internal nodes with distinct labels)
std::size_t bisection_internal_nodes(const Text& t);

// grammar for apply_edit(expand(g), e): the rules on the root-to-leaf path
// are copied with the edited child swapped in; unreachable rules dropped
Slp splice_grammar(const Slp& g, const EditOp& e);

}  // namespace repsense
