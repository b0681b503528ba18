#include "repsense/bidirectional.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace repsense {

std::size_t BidirectionalScheme::length() const {
  std::size_t n = 0;
  for (const auto& p : phrases) n += p.len;
  return n;
}

std::vector<std::size_t> BidirectionalScheme::starts() const {
  std::vector<std::size_t> s;
  std::size_t p = 1;
  for (const auto& f : phrases) s.push_back(p), p += f.len;
  return s;
}

std::string BidirectionalScheme::str(bool bytes) const {
  std::string out;
  for (const auto& f : phrases) {
    if (!bytes && !out.empty()) out += ' ';
    if (f.ground)
      out += bytes ? std::string(1, char(f.sym)) : std::to_string(f.sym);
    else
      out += "(" + std::to_string(f.src) + "," + std::to_string(f.len) + ")";
  }
  return out;
}

BidirectionalScheme BidirectionalScheme::parse(const std::string& s, bool bytes) {
  BidirectionalScheme b;
  std::size_t i = 0;
  auto number = [&](std::size_t& at) {
    std::size_t v = 0, start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) v = v * 10 + std::size_t(s[at++] - '0');
    if (at == start) throw Error("scheme: expected a number at offset " + std::to_string(start));
    return v;
  };
  while (i < s.size()) {
    char c = s[i];
    if (!bytes && std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '(') {
      ++i;
      std::size_t q = number(i);
      if (i >= s.size() || s[i] != ',') throw Error("scheme: expected ','");
      ++i;
      std::size_t l = number(i);
      if (i >= s.size() || s[i] != ')') throw Error("scheme: expected ')'");
      ++i;
      b.phrases.push_back(Phrase::make_copy(q, l));
    } else if (bytes) {
      b.phrases.push_back(Phrase::make_ground(static_cast<unsigned char>(c)));
      ++i;
    } else {
      b.phrases.push_back(Phrase::make_ground(Symbol(number(i))));
    }
  }
  return b;
}

std::vector<std::size_t> reference_function(const BidirectionalScheme& b, std::size_t n) {
  if (b.length() != n) throw Error("scheme covers " + std::to_string(b.length()) + " positions, text has " + std::to_string(n));
  std::vector<std::size_t> f(n + 1, 0);
  std::size_t p = 1;
  for (const auto& ph : b.phrases) {
    if (ph.len == 0) throw Error("scheme: empty phrase");
    if (ph.ground) {
      if (ph.len != 1) throw Error("scheme: ground phrase longer than one symbol");
    } else {
      if (ph.src < 1 || ph.src + ph.len - 1 > n) throw Error("scheme: source out of range");
      if (ph.src == p) throw Error("scheme: phrase copies itself");
      for (std::size_t k = 0; k < ph.len; ++k) f[p + k] = ph.src + k;
    }
    p += ph.len;
  }
  return f;
}

std::optional<Text> decode_scheme(const BidirectionalScheme& b, std::size_t n) {
  auto f = reference_function(b, n);
  std::vector<Symbol> val(n + 1, -1);
  {
    std::size_t p = 1;
    for (const auto& ph : b.phrases) {
      if (ph.ground) val[p] = ph.sym;
      p += ph.len;
    }
  }
  std::vector<char> state(n + 1, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> stack;
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t y = x;
    while (state[y] == 0 && f[y] != 0) {
      state[y] = 1;
      stack.push_back(y);
      y = f[y];
    }
    if (state[y] == 1) return std::nullopt;
    state[y] = 2;
    Symbol v = val[y];
    while (!stack.empty()) {
      val[stack.back()] = v;
      state[stack.back()] = 2;
      stack.pop_back();
    }
  }
  return Text(std::vector<Symbol>(val.begin() + 1, val.end()));
}

bool validate_scheme(const Text& t, const BidirectionalScheme& b) {
  const std::size_t n = t.size();
  auto f = reference_function(b, n);
  for (std::size_t x = 1; x <= n; ++x)
    if (f[x] && t.at(f[x]) != t.at(x)) return false;
  std::size_t p = 1;
  for (const auto& ph : b.phrases) {
    if (ph.ground && ph.sym != t.at(p)) return false;
    p += ph.len;
  }
  auto d = decode_scheme(b, n);
  return d && *d == t;
}

BidirectionalScheme scheme_from_factorization(const Factorization& fz) {
  BidirectionalScheme b;
  for (const auto& f : fz.factors) {
    if (f.copy > 0)
      b.phrases.push_back(Phrase::make_copy(f.src, f.copy));
    if (f.sym >= 0) b.phrases.push_back(Phrase::make_ground(f.sym));
  }
  return b;
}

namespace {

class BSearch {
 public:
  BSearch(const std::vector<Symbol>& s, std::optional<std::uint64_t> budget) : s_(s), n_(s.size()), budget_(budget) {
    auto alpha = s;
    std::sort(alpha.begin(), alpha.end());
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
    for (Symbol c : s) code_.push_back(std::size_t(std::lower_bound(alpha.begin(), alpha.end(), c) - alpha.begin()));
    sigma_ = alpha.size();
    // lcp table, any direction
    lcp_.assign((n_ + 1) * (n_ + 1), 0);
    for (std::size_t i = n_; i-- > 0;)
      for (std::size_t j = n_; j-- > 0;)
        if (s[i] == s[j]) lcp_[i * (n_ + 1) + j] = lcp_[(i + 1) * (n_ + 1) + j + 1] + 1;
    maxlen_.assign(n_, 1);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q)
        if (q != p) maxlen_[p] = std::max(maxlen_[p], lcp(p, q));
    cover_.assign(n_ + 1, 0);
    for (std::size_t p = n_; p-- > 0;) {
      std::size_t best = n_ + 1;
      for (std::size_t l = 1; l <= maxlen_[p]; ++l) best = std::min(best, cover_[p + l]);
      cover_[p] = best + 1;
    }
    // last occurrence of each symbol: an ungrounded symbol needs one later on
    last_.assign(sigma_, 0);
    for (std::size_t i = 0; i < n_; ++i) last_[code_[i]] = i;
    f_.assign(n_, kUnset);
    grounded_.assign(sigma_, 0);
  }

  // finds a scheme smaller than `bound` phrases if one exists
  void run(std::size_t bound, const std::vector<Phrase>& incumbent) {
    best_ = bound;
    best_scheme_ = incumbent;
    ungrounded_ = sigma_;
    dfs(0, 0);
  }

  bool aborted() const { return aborted_; }
  std::size_t best() const { return best_; }
  const std::vector<Phrase>& best_scheme() const { return best_scheme_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::size_t kUnset = ~std::size_t(0);
  static constexpr std::size_t kGround = kUnset - 1;

  std::size_t lcp(std::size_t i, std::size_t j) const { return lcp_[i * (n_ + 1) + j]; }

  // would x -> y close a cycle?
  bool closes_cycle(std::size_t x, std::size_t y) const {
    while (true) {
      if (y == x) return true;
      std::size_t nx = f_[y];
      if (nx == kUnset || nx == kGround) return false;
      y = nx;
    }
  }

  void dfs(std::size_t p, std::size_t k) {
    if (aborted_) return;
    ++nodes_;
    if (budget_ && nodes_ > *budget_) { aborted_ = true; return; }
    if (p == n_) {
      if (ungrounded_ == 0 && k < best_) best_ = k, best_scheme_ = cur_;
      return;
    }
    std::size_t lower = std::max(cover_[p], ungrounded_);
    if (k + lower >= best_) return;
    for (std::size_t c = 0; c < sigma_; ++c)
      if (!grounded_[c] && last_[c] < p) return;

    // copies, longest first
    for (std::size_t l = maxlen_[p]; l >= 2; --l) {
      if (k + 1 + cover_[p + l] >= best_) continue;
      for (std::size_t q = 0; q + l <= n_; ++q) {
        if (q == p || lcp(p, q) < l) continue;
        std::size_t done = 0;
        for (; done < l; ++done) {
          if (closes_cycle(p + done, q + done)) break;
          f_[p + done] = q + done;
        }
        if (done == l) {
          cur_.push_back(Phrase::make_copy(q + 1, l));
          dfs(p + l, k + 1);
          cur_.pop_back();
        }
        for (std::size_t d = 0; d < done; ++d) f_[p + d] = kUnset;
        if (aborted_) return;
      }
    }
    // ground
    std::size_t c = code_[p];
    bool fresh = !grounded_[c];
    if (fresh) grounded_[c] = 1, --ungrounded_;
    f_[p] = kGround;
    cur_.push_back(Phrase::make_ground(s_[p]));
    dfs(p + 1, k + 1);
    cur_.pop_back();
    f_[p] = kUnset;
    if (fresh) grounded_[c] = 0, ++ungrounded_;
  }

  const std::vector<Symbol>& s_;
  std::size_t n_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::size_t> code_;
  std::size_t sigma_ = 0;
  std::vector<std::size_t> lcp_, maxlen_, cover_, last_, f_;
  std::vector<char> grounded_;
  std::size_t ungrounded_ = 0;
  std::vector<Phrase> cur_, best_scheme_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

BResult b_exact(const Text& t, std::size_t max_n, std::optional<std::uint64_t> budget) {
  require_nonempty(t, "b_exact");
  if (t.size() > max_n)
    throw Error("b_exact: n = " + std::to_string(t.size()) + " exceeds limit " + std::to_string(max_n));
  auto inc = scheme_from_factorization(lzsssr(t));
  BSearch s(t.symbols(), budget);
  s.run(inc.size(), inc.phrases);
  BResult r;
  r.conclusive = !s.aborted();
  r.b = s.best();
  r.witness.phrases = s.best_scheme();
  r.nodes = s.nodes();
  return r;
}

BidirectionalScheme splice_scheme(const Text& t, const BidirectionalScheme& b, const EditOp& e) {
  if (!validate_scheme(t, b)) throw Error("splice_scheme: input scheme is not valid for the text");
  if (!edit_valid(t, e)) throw Error("splice_scheme: invalid edit " + e.str());
  const std::size_t n = t.size();
  const std::size_t i = e.pos;
  auto f = reference_function(b, n);
  auto starts = b.starts();

  // hole: the position whose old symbol can no longer be copied from
  const std::size_t hole = e.kind == EditKind::Ins ? 0 : i;

  // phrase whose target avoids the hole but whose source covers it, with
  // the rightmost source end
  std::size_t fk = SIZE_MAX, y0 = 0;
  if (hole) {
    std::size_t best_end = 0;
    for (std::size_t j = 0; j < b.phrases.size(); ++j) {
      const auto& ph = b.phrases[j];
      if (ph.ground) continue;
      std::size_t p = starts[j];
      bool target_has = p <= hole && hole < p + ph.len;
      bool source_has = ph.src <= hole && hole < ph.src + ph.len;
      if (!target_has && source_has && ph.src + ph.len - 1 > best_end) {
        best_end = ph.src + ph.len - 1;
        fk = j;
      }
    }
    if (fk != SIZE_MAX) y0 = starts[fk] + (hole - b.phrases[fk].src);
  }

  // per position of T: ground symbol or pointer into T (0 = ground)
  std::vector<std::size_t> ptr(n + 1, 0);
  std::vector<Symbol> gsym(n + 1, -1);
  for (std::size_t j = 0; j < b.phrases.size(); ++j) {
    const auto& ph = b.phrases[j];
    std::size_t p = starts[j];
    if (ph.ground) {
      gsym[p] = ph.sym;
      continue;
    }
    bool target_has = hole && p <= hole && hole < p + ph.len;
    bool redirected = false;
    for (std::size_t k = 0; k < ph.len; ++k) {
      std::size_t x = p + k, s = ph.src + k;
      if (hole && s == hole) {
        if (target_has || j == fk) {
          gsym[x] = t.at(hole);
          continue;
        }
        redirected = true;
      }
      ptr[x] = redirected ? y0 + (s - hole) : s;
    }
  }
  if (e.kind == EditKind::Sub) ptr[i] = 0, gsym[i] = e.sym;

  // T position -> T' position (0 = removed)
  auto phi = [&](std::size_t x) -> std::size_t {
    switch (e.kind) {
      case EditKind::Sub: return x;
      case EditKind::Ins: return x < i ? x : x + 1;
      case EditKind::Del: return x == i ? 0 : (x < i ? x : x - 1);
    }
    return x;
  };

  const std::size_t n2 = e.kind == EditKind::Ins ? n + 1 : (e.kind == EditKind::Del ? n - 1 : n);
  std::vector<std::size_t> ptr2(n2 + 1, 0);
  std::vector<Symbol> g2(n2 + 1, -1);
  std::vector<std::size_t> origin(n2 + 1, 0);  // T' position -> T position, 0 for the inserted one
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t y = phi(x);
    if (!y) continue;
    origin[y] = x;
    if (ptr[x])
      ptr2[y] = phi(ptr[x]);
    else
      g2[y] = gsym[x];
  }
  if (e.kind == EditKind::Ins) g2[i] = e.sym;

  // merge runs of consecutive pointers that came from the same phrase
  auto phrase_of = [&](std::size_t x) {
    return std::size_t(std::upper_bound(starts.begin(), starts.end(), x) - starts.begin());
  };
  BidirectionalScheme out;
  for (std::size_t y = 1; y <= n2; ++y) {
    if (!ptr2[y]) {
      out.phrases.push_back(Phrase::make_ground(g2[y]));
      continue;
    }
    bool extend = y > 1 && ptr2[y - 1] && ptr2[y - 1] + 1 == ptr2[y] && origin[y - 1] && origin[y] &&
                  phrase_of(origin[y - 1]) == phrase_of(origin[y]);
    if (extend)
      ++out.phrases.back().len;
    else
      out.phrases.push_back(Phrase::make_copy(ptr2[y], 1));
  }
  return out;
}

}  // namespace repsense
