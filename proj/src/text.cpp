#include "repsense/text.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace repsense {

Text::Text(std::vector<Symbol> s) : sym_(std::move(s)) {
  for (Symbol c : sym_)
    if (c < 0) throw Error("symbols must be nonnegative");
}

Text Text::from_bytes(std::string_view s) {
  std::vector<Symbol> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = static_cast<unsigned char>(s[i]);
  return Text(std::move(v));
}

Text Text::from_tokens(std::string_view s) {
  std::vector<Symbol> v;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    Symbol x = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, x);
    if (ec != std::errc() || p != s.data() + j || x < 0)
      throw Error("bad token '" + std::string(s.substr(i, j - i)) + "'");
    v.push_back(x);
    i = j;
  }
  return Text(std::move(v));
}

std::vector<Symbol> Text::alphabet() const {
  std::vector<Symbol> a = sym_;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Symbol Text::max_symbol() const {
  if (sym_.empty()) return -1;
  return *std::max_element(sym_.begin(), sym_.end());
}

std::string Text::render() const {
  bool printable = std::all_of(sym_.begin(), sym_.end(), [](Symbol c) { return c > 32 && c < 127; });
  if (printable) return std::string(sym_.begin(), sym_.end());
  return tokens();
}

std::string Text::tokens() const {
  std::string out;
  for (std::size_t i = 0; i < sym_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sym_[i]);
  }
  return out;
}

void require_nonempty(const Text& t, const char* who) {
  if (t.empty()) throw Error(std::string(who) + ": empty text");
}

const char* to_string(EditKind k) {
  switch (k) {
    case EditKind::Sub: return "sub";
    case EditKind::Ins: return "ins";
    case EditKind::Del: return "del";
  }
  return "?";
}

EditKind parse_edit_kind(std::string_view s) {
  if (s == "sub") return EditKind::Sub;
  if (s == "ins") return EditKind::Ins;
  if (s == "del") return EditKind::Del;
  throw Error("unknown edit kind '" + std::string(s) + "' (expected sub, ins or del)");
}

std::string EditOp::str() const {
  std::string s = std::string(to_string(kind)) + "@" + std::to_string(pos);
  if (kind != EditKind::Del) s += ":" + std::to_string(sym);
  return s;
}

AlphabetPolicy AlphabetPolicy::fixed(std::vector<Symbol> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  for (Symbol c : sigma)
    if (c < 0) throw Error("symbols must be nonnegative");
  AlphabetPolicy p;
  p.mode_ = Mode::Fixed;
  p.k_ = 0;
  p.sigma_ = std::move(sigma);
  return p;
}

AlphabetPolicy AlphabetPolicy::extend_by_fresh(int k) {
  if (k < 0) throw Error("fresh count must be >= 0");
  AlphabetPolicy p;
  p.mode_ = Mode::ExtendFresh;
  p.k_ = k;
  return p;
}

std::vector<Symbol> AlphabetPolicy::symbols_for(const Text& t) const {
  if (mode_ == Mode::Fixed) return sigma_;
  std::vector<Symbol> a = t.alphabet();
  Symbol top = t.max_symbol();
  for (int i = 1; i <= k_; ++i) a.push_back(top + i);
  return a;
}

std::string AlphabetPolicy::str() const {
  if (mode_ == Mode::ExtendFresh) return "extend-by-fresh(" + std::to_string(k_) + ")";
  std::string s = "fixed(";
  for (std::size_t i = 0; i < sigma_.size(); ++i) s += (i ? "," : "") + std::to_string(sigma_[i]);
  return s + ")";
}

bool edit_valid(const Text& t, const EditOp& e) {
  std::size_t n = t.size();
  switch (e.kind) {
    case EditKind::Sub: return e.pos >= 1 && e.pos <= n && e.sym >= 0 && e.sym != t.at(e.pos);
    case EditKind::Ins: return e.pos >= 1 && e.pos <= n + 1 && e.sym >= 0;
    case EditKind::Del: return e.pos >= 1 && e.pos <= n;
  }
  return false;
}

Text apply_edit(const Text& t, const EditOp& e) {
  if (!edit_valid(t, e)) throw Error("invalid edit " + e.str() + " for text of length " + std::to_string(t.size()));
  std::vector<Symbol> v = t.symbols();
  switch (e.kind) {
    case EditKind::Sub: v[e.pos - 1] = e.sym; break;
    case EditKind::Ins: v.insert(v.begin() + std::ptrdiff_t(e.pos - 1), e.sym); break;
    case EditKind::Del: v.erase(v.begin() + std::ptrdiff_t(e.pos - 1)); break;
  }
  return Text(std::move(v));
}

EditOp inverse_edit(const Text& t, const EditOp& e) {
  switch (e.kind) {
    case EditKind::Sub: return EditOp::sub(e.pos, t.at(e.pos));
    case EditKind::Ins: return EditOp::del(e.pos);
    case EditKind::Del: return EditOp::ins(e.pos, t.at(e.pos));
  }
  return e;
}

std::vector<EditOp> enumerate_edits(const Text& t, EditKind kind, const AlphabetPolicy& policy) {
  require_nonempty(t, "enumerate_edits");
  std::vector<EditOp> out;
  const std::size_t n = t.size();
  if (kind == EditKind::Del) {
    for (std::size_t i = 1; i <= n; ++i) out.push_back(EditOp::del(i));
    return out;
  }
  auto a = policy.symbols_for(t);
  if (kind == EditKind::Sub) {
    for (std::size_t i = 1; i <= n; ++i)
      for (Symbol c : a)
        if (c != t.at(i)) out.push_back(EditOp::sub(i, c));
  } else {
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (Symbol c : a) out.push_back(EditOp::ins(i, c));
  }
  return out;
}

Text canonicalize(const Text& t) {
  std::unordered_map<Symbol, Symbol> m;
  std::vector<Symbol> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto [it, fresh] = m.try_emplace(t[i], Symbol(m.size()));
    v[i] = it->second;
  }
  return Text(std::move(v));
}

}  // namespace repsense
