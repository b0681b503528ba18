#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repsense {

using Symbol = std::int32_t;

struct Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Text {
 public:
  Text() = default;
  Text(std::vector<Symbol> s);  // NOLINT
  Text(std::initializer_list<Symbol> s) : Text(std::vector<Symbol>(s)) {}

  // each byte is one symbol
  static Text from_bytes(std::string_view s);
  // whitespace separated nonnegative decimals
  static Text from_tokens(std::string_view s);

  std::size_t size() const { return sym_.size(); }
  bool empty() const { return sym_.empty(); }
  const std::vector<Symbol>& symbols() const { return sym_; }
  // 1-based, like the T[i] of the definitions
  Symbol at(std::size_t i) const { return sym_.at(i - 1); }
  Symbol operator[](std::size_t i) const { return sym_[i]; }  // 0-based
  auto begin() const { return sym_.begin(); }
  auto end() const { return sym_.end(); }

  std::vector<Symbol> alphabet() const;
  Symbol max_symbol() const;

  // printable bytes stay bytes, anything else becomes a token dump
  std::string render() const;
  std::string tokens() const;

  friend bool operator==(const Text&, const Text&) = default;
  friend auto operator<=>(const Text& a, const Text& b) { return a.sym_ <=> b.sym_; }

 private:
  std::vector<Symbol> sym_;
};

void require_nonempty(const Text& t, const char* who);

enum class EditKind { Sub, Ins, Del };

const char* to_string(EditKind k);
EditKind parse_edit_kind(std::string_view s);

struct EditOp {
  EditKind kind = EditKind::Sub;
  std::size_t pos = 1;  // 1-based; for Ins the new symbol lands at pos
  Symbol sym = 0;       // unused for Del

  static EditOp sub(std::size_t p, Symbol c) { return {EditKind::Sub, p, c}; }
  static EditOp ins(std::size_t p, Symbol c) { return {EditKind::Ins, p, c}; }
  static EditOp del(std::size_t p) { return {EditKind::Del, p, 0}; }

  std::string str() const;
  friend bool operator==(const EditOp&, const EditOp&) = default;
};

class AlphabetPolicy {
 public:
  enum class Mode { Fixed, ExtendFresh };

  static AlphabetPolicy fixed(std::vector<Symbol> sigma);
  static AlphabetPolicy extend_by_fresh(int k = 1);

  Mode mode() const { return mode_; }
  int fresh() const { return k_; }
  const std::vector<Symbol>& fixed_symbols() const { return sigma_; }

  // symbols edits may write into t, ascending
  std::vector<Symbol> symbols_for(const Text& t) const;
  std::string str() const;

 private:
  Mode mode_ = Mode::ExtendFresh;
  int k_ = 1;
  std::vector<Symbol> sigma_;
};

bool edit_valid(const Text& t, const EditOp& e);
Text apply_edit(const Text& t, const EditOp& e);
// the edit that takes apply_edit(t, e) back to t
EditOp inverse_edit(const Text& t, const EditOp& e);

std::vector<EditOp> enumerate_edits(const Text& t, EditKind kind, const AlphabetPolicy& policy = {});

Text canonicalize(const Text& t);

}  // namespace repsense
