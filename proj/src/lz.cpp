#include "repsense/lz.hpp"

#include <algorithm>
#include <map>

namespace repsense {

const char* to_string(LzVariant v) {
  switch (v) {
    case LzVariant::LZ77: return "z77";
    case LzVariant::LZ77sr: return "z77sr";
    case LzVariant::LZSS: return "zss";
    case LzVariant::LZSSsr: return "zsssr";
    case LzVariant::LZ78: return "z78";
    case LzVariant::LZEnd: return "zend";
  }
  return "?";
}

LzVariant parse_lz_variant(std::string_view s) {
  for (auto v : {LzVariant::LZ77, LzVariant::LZ77sr, LzVariant::LZSS, LzVariant::LZSSsr, LzVariant::LZ78,
                 LzVariant::LZEnd})
    if (s == to_string(v)) return v;
  throw Error("unknown LZ variant '" + std::string(s) + "'");
}

namespace {

// lcp of T[p..] against every T[q..], q < p, via the Z-function of T[p..] # T
class PrefixMatcher {
 public:
  explicit PrefixMatcher(const std::vector<Symbol>& s) : s_(s) {}

  const std::vector<std::int32_t>& at(std::size_t p) {
    const std::size_t n = s_.size(), m = n - p;
    buf_.clear();
    buf_.insert(buf_.end(), s_.begin() + std::ptrdiff_t(p), s_.end());
    buf_.push_back(-1);
    buf_.insert(buf_.end(), s_.begin(), s_.begin() + std::ptrdiff_t(p));
    // lcp may run past p (self-reference), so append the tail too
    buf_.insert(buf_.end(), s_.begin() + std::ptrdiff_t(p), s_.end());
    const std::size_t len = buf_.size();
    z_.assign(len, 0);
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < len; ++i) {
      std::int32_t k = 0;
      if (i < r) k = std::min<std::int32_t>(std::int32_t(r - i), z_[i - l]);
      while (i + std::size_t(k) < len && buf_[std::size_t(k)] == buf_[i + std::size_t(k)]) ++k;
      z_[i] = k;
      if (i + std::size_t(k) > r) l = i, r = i + std::size_t(k);
    }
    out_.assign(p, 0);
    for (std::size_t q = 0; q < p; ++q) out_[q] = std::min<std::int32_t>(z_[m + 1 + q], std::int32_t(m));
    return out_;
  }

 private:
  const std::vector<Symbol>& s_;
  std::vector<Symbol> buf_;
  std::vector<std::int32_t> z_, out_;
};

Factor make_factor(std::size_t p, std::size_t len, std::size_t src, std::size_t copy, const std::vector<Symbol>& s) {
  Factor f;
  f.start = p + 1;
  f.len = len;
  f.copy = copy;
  f.src = copy ? src + 1 : 0;
  f.sym = len > copy ? s[p + len - 1] : -1;
  f.kind = copy ? Factor::Kind::Reference : Factor::Kind::Literal;
  return f;
}

// LZ77 / LZ77sr / LZSS / LZSSsr share one loop
Factorization greedy(const Text& t, LzVariant v) {
  require_nonempty(t, to_string(v));
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  const bool overlap = v == LzVariant::LZ77sr || v == LzVariant::LZSSsr;
  const bool plus_one = v == LzVariant::LZ77 || v == LzVariant::LZ77sr;
  PrefixMatcher pm(s);
  Factorization out;
  out.variant = v;
  std::size_t p = 0;
  while (p < n) {
    const auto& lcp = pm.at(p);
    std::size_t best = 0, src = 0;
    for (std::size_t q = 0; q < p; ++q) {
      std::size_t l = std::size_t(lcp[q]);
      if (!overlap) l = std::min(l, p - q);
      if (l > best) best = l, src = q;
    }
    std::size_t len;
    if (plus_one)
      len = p + best == n ? best : best + 1;
    else
      len = best == 0 ? 1 : best;
    out.factors.push_back(make_factor(p, len, src, best, s));
    p += len;
  }
  return out;
}

}  // namespace

Factorization lz77(const Text& t) { return greedy(t, LzVariant::LZ77); }
Factorization lz77sr(const Text& t) { return greedy(t, LzVariant::LZ77sr); }
Factorization lzss(const Text& t) { return greedy(t, LzVariant::LZSS); }
Factorization lzsssr(const Text& t) { return greedy(t, LzVariant::LZSSsr); }

Factorization lzend(const Text& t) {
  require_nonempty(t, "zend");
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  PrefixMatcher pm(s);
  Factorization out;
  out.variant = LzVariant::LZEnd;
  std::vector<std::size_t> ends;  // 0-based inclusive ends of earlier factors, ascending
  std::size_t p = 0;
  while (p < n) {
    const auto& lcp = pm.at(p);
    std::size_t best = 0, src = 0;
    for (std::size_t q = 0; q < p && !ends.empty(); ++q) {
      if (lcp[q] == 0) continue;
      std::size_t hi = std::min(q + std::size_t(lcp[q]) - 1, p - 1);
      // largest earlier factor end inside [q, hi]
      auto it = std::upper_bound(ends.begin(), ends.end(), hi);
      if (it == ends.begin()) continue;
      std::size_t e = *std::prev(it);
      if (e < q) continue;
      if (e - q + 1 > best) best = e - q + 1, src = q;
    }
    std::size_t len = p + best == n ? best : best + 1;
    out.factors.push_back(make_factor(p, len, src, best, s));
    p += len;
    ends.push_back(p - 1);
  }
  return out;
}

Factorization lz78(const Text& t) {
  require_nonempty(t, "z78");
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  std::vector<std::map<Symbol, std::size_t>> trie(1);  // node 0 = empty phrase
  std::vector<std::size_t> node_factor(1, 0);           // trie node -> factor index (1-based)
  std::vector<std::size_t> factor_start(1, 0);
  Factorization out;
  out.variant = LzVariant::LZ78;
  std::size_t p = 0;
  while (p < n) {
    std::size_t node = 0, d = 0;
    while (p + d < n) {
      auto it = trie[node].find(s[p + d]);
      if (it == trie[node].end()) break;
      node = it->second;
      ++d;
    }
    Factor f;
    f.start = p + 1;
    f.kind = Factor::Kind::Lz78Pair;
    if (p + d == n) {
      // leftover equals an earlier factor
      f.len = d;
      f.copy = d;
      f.parent = node_factor[node];
    } else {
      f.len = d + 1;
      f.copy = d;
      f.sym = s[p + d];
      f.parent = node_factor[node];
      trie[node][s[p + d]] = trie.size();
      trie.emplace_back();
      node_factor.push_back(out.factors.size() + 1);
    }
    f.src = f.parent ? out.factors[f.parent - 1].start : 0;
    out.factors.push_back(f);
    p += f.len;
  }
  return out;
}

Factorization factorize(const Text& t, LzVariant v) {
  switch (v) {
    case LzVariant::LZ78: return lz78(t);
    case LzVariant::LZEnd: return lzend(t);
    default: return greedy(t, v);
  }
}

std::size_t lz_size(const Text& t, LzVariant v) { return factorize(t, v).z(); }

Text Factorization::reconstruct() const {
  std::vector<Symbol> out;
  for (const auto& f : factors) {
    for (std::size_t j = 0; j < f.copy; ++j) out.push_back(out.at(f.src - 1 + j));
    if (f.sym >= 0) out.push_back(f.sym);
  }
  return Text(std::move(out));
}

std::string Factorization::render(const Text& t) const {
  const bool bytes = std::all_of(t.begin(), t.end(), [](Symbol c) { return c > 32 && c < 127; });
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += bytes ? "|" : " | ";
    const auto& f = factors[i];
    for (std::size_t j = 0; j < f.len; ++j) {
      Symbol c = t.at(f.start + j);
      if (bytes)
        out += char(c);
      else
        out += (j ? " " : "") + std::to_string(c);
    }
  }
  return out;
}

}  // namespace repsense
