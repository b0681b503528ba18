#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "repsense/text.hpp"

namespace repsense::detail {

// prefix doubling; fine for the sizes this library targets
inline std::vector<std::int32_t> suffix_array(const std::vector<Symbol>& s) {
  const int n = int(s.size());
  std::vector<std::int32_t> sa(n), rk(n), tmp(n);
  for (int i = 0; i < n; ++i) sa[i] = i, rk[i] = s[i];
  if (n <= 1) return sa;
  for (int k = 1;; k <<= 1) {
    auto key = [&](int i) { return i + k < n ? rk[i + k] : -1; };
    auto cmp = [&](int a, int b) { return rk[a] != rk[b] ? rk[a] < rk[b] : key(a) < key(b); };
    std::sort(sa.begin(), sa.end(), cmp);
    tmp[sa[0]] = 0;
    for (int i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
    rk.swap(tmp);
    if (rk[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// lcp[i] = lcp of suffixes sa[i-1], sa[i]; lcp[0] = 0 (Kasai)
inline std::vector<std::int32_t> lcp_array(const std::vector<Symbol>& s, const std::vector<std::int32_t>& sa) {
  const int n = int(s.size());
  std::vector<std::int32_t> rank(n), lcp(n, 0);
  for (int i = 0; i < n; ++i) rank[sa[i]] = i;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (rank[i] > 0) {
      int j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
      lcp[rank[i]] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

}  // namespace repsense::detail
