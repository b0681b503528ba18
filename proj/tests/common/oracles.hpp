#pragma once
// Brute-force references, written straight from the definitions and sharing no code
// with the library beyond the Text container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace oracle {

using repsense::Rational;
using repsense::Symbol;
using repsense::Text;
using Vec = std::vector<Symbol>;

inline Vec sub(const Vec& v, std::size_t i, std::size_t l) { return Vec(v.begin() + i, v.begin() + i + l); }

// occurrence of w starting at some j < lim, fully inside v[0..end)
inline bool occurs(const Vec& v, const Vec& w, std::size_t lim, std::size_t end) {
  for (std::size_t j = 0; j < lim && j + w.size() <= end; ++j)
    if (std::equal(w.begin(), w.end(), v.begin() + j)) return true;
  return false;
}

// each returns the factor lengths
inline std::vector<std::size_t> lz77(const Vec& t, bool self_ref) {
  std::vector<std::size_t> f;
  std::size_t i = 0, n = t.size();
  while (i < n) {
    std::size_t l = 1;
    // shortest prefix with no earlier occurrence (inside the prefix, or just starting before i)
    while (i + l <= n && occurs(t, sub(t, i, l), i, self_ref ? n : i)) ++l;
    if (i + l > n) l = n - i;
    f.push_back(l);
    i += l;
  }
  return f;
}

inline std::vector<std::size_t> lzss(const Vec& t, bool self_ref) {
  std::vector<std::size_t> f;
  std::size_t i = 0, n = t.size();
  while (i < n) {
    std::size_t l = 0;
    while (i + l + 1 <= n && occurs(t, sub(t, i, l + 1), i, self_ref ? n : i)) ++l;
    f.push_back(std::max<std::size_t>(l, 1));
    i += f.back();
  }
  return f;
}

inline std::vector<std::size_t> lz78(const Vec& t) {
  std::vector<std::size_t> f;
  std::set<Vec> phrases{Vec{}};
  std::size_t i = 0, n = t.size();
  while (i < n) {
    std::size_t best = 1;
    for (std::size_t l = 1; i + l <= n; ++l)
      if (phrases.count(sub(t, i, l - 1))) best = l;
    // the remainder may itself be an old phrase
    if (phrases.count(sub(t, i, n - i))) best = n - i;
    phrases.insert(sub(t, i, best));
    f.push_back(best);
    i += best;
  }
  return f;
}

inline std::vector<std::size_t> lzend(const Vec& t) {
  std::vector<std::size_t> f;
  std::vector<std::size_t> ends{0};  // prefix lengths f_1..f_j
  std::size_t i = 0, n = t.size();
  while (i < n) {
    std::size_t best = 0;
    for (std::size_t l = 1; i + l <= n; ++l) {
      Vec w = sub(t, i, l);
      bool ok = false;
      for (auto e : ends)
        if (e >= l && std::equal(w.begin(), w.end(), t.begin() + (e - l))) ok = true;
      if (ok) best = l;
    }
    std::size_t len = i + best == n ? best : best + 1;
    f.push_back(len);
    i += len;
    ends.push_back(i);
  }
  return f;
}

inline std::int64_t substr_count(const Vec& t, std::size_t k) {
  std::set<Vec> s;
  for (std::size_t i = 0; i + k <= t.size(); ++i) s.insert(sub(t, i, k));
  return std::int64_t(s.size());
}

inline Rational delta(const Vec& t) {
  Rational best = 0;
  for (std::size_t k = 1; k <= t.size(); ++k) best = std::max(best, Rational(substr_count(t, k), std::int64_t(k)));
  return best;
}

// every distinct substring has an occurrence covering some marked position (1-based)
inline bool is_attractor(const Vec& t, const std::vector<std::size_t>& pos) {
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 1; i + l <= n; ++l) {
      Vec w = sub(t, i, l);
      bool hit = false;
      for (std::size_t j = 0; j + l <= n && !hit; ++j)
        if (std::equal(w.begin(), w.end(), t.begin() + j))
          for (auto p : pos)
            if (p >= j + 1 && p <= j + l) hit = true;
      if (!hit) return false;
    }
  return true;
}

inline std::size_t gamma(const Vec& t) {
  std::size_t n = t.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) pos.push_back(i + 1);
      if (is_attractor(t, pos)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

// a phrase is (-1, c) for a ground symbol c or (q, l) copying from 1-based q
struct Phrase {
  long long q;
  std::size_t len;
  Symbol c;
};

inline std::optional<Vec> decode(const std::vector<Phrase>& ps, std::size_t n) {
  std::vector<long long> src(n + 1, 0);
  Vec ground(n + 1, -1);
  std::size_t p = 1;
  for (auto& ph : ps) {
    for (std::size_t j = 0; j < ph.len; ++j) {
      if (ph.q < 0)
        ground[p + j] = ph.c;
      else
        src[p + j] = ph.q + static_cast<long long>(j);
    }
    p += ph.len;
  }
  Vec out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    long long x = static_cast<long long>(i);
    std::size_t steps = 0;
    while (ground[std::size_t(x)] < 0) {
      x = src[std::size_t(x)];
      if (x < 1 || x > static_cast<long long>(n) || ++steps > n) return std::nullopt;
    }
    out[i - 1] = ground[std::size_t(x)];
  }
  return out;
}

// smallest bidirectional scheme by trying every parsing and every source
inline std::size_t b(const Vec& t) {
  const std::size_t n = t.size();
  for (std::size_t s = 1; s <= n; ++s) {
    std::vector<Phrase> cur;
    std::function<bool(std::size_t)> go = [&](std::size_t p) -> bool {
      if (cur.size() == s) return p == n + 1 && decode(cur, n) == t;
      std::size_t left = s - cur.size();
      for (std::size_t len = 1; p + len - 1 <= n; ++len) {
        if (n + 1 - (p + len) < left - 1) break;
        if (len == 1) {
          cur.push_back({-1, 1, t[p - 1]});
          if (go(p + 1)) return true;
          cur.pop_back();
        }
        for (std::size_t q = 1; q + len - 1 <= n; ++q) {
          if (q == p) continue;
          cur.push_back({static_cast<long long>(q), len, 0});
          if (go(p + len)) return true;
          cur.pop_back();
        }
      }
      return false;
    };
    if (go(1)) return s;
  }
  return n;
}

}  // namespace oracle
