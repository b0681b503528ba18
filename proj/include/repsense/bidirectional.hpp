#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repsense/lz.hpp"
#include "repsense/text.hpp"

namespace repsense {

struct Phrase {
  bool ground = true;
  Symbol sym = 0;       // ground only
  std::size_t src = 0;  // copy only, 1-based
  std::size_t len = 1;

  static Phrase make_ground(Symbol c) { return {true, c, 0, 1}; }
  static Phrase make_copy(std::size_t q, std::size_t l) { return {false, 0, q, l}; }
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct BidirectionalScheme {
  std::vector<Phrase> phrases;

  std::size_t size() const { return phrases.size(); }
  std::size_t length() const;
  std::vector<std::size_t> starts() const;  // 1-based p_j
  // (q,l) for copies, the symbol for ground phrases
  std::string str(bool bytes) const;
  static BidirectionalScheme parse(const std::string& s, bool bytes);
  friend bool operator==(const BidirectionalScheme&, const BidirectionalScheme&) = default;
};

// the reference function; 0 for ground positions. Throws if malformed.
std::vector<std::size_t> reference_function(const BidirectionalScheme& b, std::size_t n);

// decoded text, or nullopt when F_B has a cycle
std::optional<Text> decode_scheme(const BidirectionalScheme& b, std::size_t n);

bool validate_scheme(const Text& t, const BidirectionalScheme& b);

// literal -> ground, reference -> copy (+ ground for a trailing symbol)
BidirectionalScheme scheme_from_factorization(const Factorization& f);

struct BResult {
  bool conclusive = false;
  std::size_t b = 0;  // upper bound when inconclusive
  BidirectionalScheme witness;
  std::uint64_t nodes = 0;
};

BResult b_exact(const Text& t, std::size_t max_n = 10, std::optional<std::uint64_t> budget = std::nullopt);

// scheme for apply_edit(t, e) built by splitting the phrases of b
BidirectionalScheme splice_scheme(const Text& t, const BidirectionalScheme& b, const EditOp& e);

}  // namespace repsense
