#include "repsense/bwt.hpp"

#include <algorithm>
#include <vector>

namespace repsense {

namespace {

// sorted rotation starts, cyclic prefix doubling
std::vector<std::size_t> sort_rotations(const std::vector<Symbol>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> idx(n), rk(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i, rk[i] = std::size_t(s[i]);
  for (std::size_t k = 1;; k <<= 1) {
    auto cmp = [&](std::size_t a, std::size_t b) {
      if (rk[a] != rk[b]) return rk[a] < rk[b];
      return rk[(a + k) % n] < rk[(b + k) % n];
    };
    std::sort(idx.begin(), idx.end(), cmp);
    tmp[idx[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[idx[i]] = tmp[idx[i - 1]] + (cmp(idx[i - 1], idx[i]) ? 1 : 0);
    rk.swap(tmp);
    // ranks stabilise once k reaches n; equal rotations keep equal ranks
    if (rk[idx[n - 1]] == n - 1 || k >= n) break;
  }
  return idx;
}

}  // namespace

std::size_t count_runs(const Text& t) {
  std::size_t r = t.empty() ? 0 : 1;
  for (std::size_t i = 1; i < t.size(); ++i) r += t[i] != t[i - 1];
  return r;
}

BwtResult bwt(const Text& t) {
  require_nonempty(t, "bwt");
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  auto idx = sort_rotations(s);
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s[(idx[i] + n - 1) % n];
  BwtResult res;
  res.bwt = Text(std::move(out));
  res.r = count_runs(res.bwt);
  return res;
}

std::size_t bwt_runs(const Text& t) { return bwt(t).r; }

Text reversed_fibonacci(int k) {
  if (k < 1) throw Error("reversed_fibonacci needs k >= 1");
  std::vector<Symbol> prev{1}, cur{0};  // F_1 = b, F_2 = a
  if (k == 1) cur = prev;
  for (int i = 3; i <= k; ++i) {
    std::vector<Symbol> next = cur;
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::reverse(cur.begin(), cur.end());
  return Text(std::move(cur));
}

}  // namespace repsense
