#include "repsense/attractor.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "repsense/lz.hpp"

namespace repsense {

namespace {

using Mask = std::uint64_t;

// one mask per distinct substring: union of its occurrence intervals
std::vector<Mask> occurrence_masks(const std::vector<Symbol>& s) {
  const std::size_t n = s.size();
  std::vector<Mask> masks;
  // group occurrences of equal substrings by extending classes length by length
  std::vector<std::vector<std::size_t>> classes;
  {
    std::map<Symbol, std::vector<std::size_t>> by;
    for (std::size_t i = 0; i < n; ++i) by[s[i]].push_back(i);
    for (auto& [c, v] : by) classes.push_back(std::move(v));
  }
  for (std::size_t len = 1; !classes.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& cls : classes) {
      Mask m = 0;
      Mask span = len >= 64 ? ~Mask(0) : (Mask(1) << len) - 1;
      for (std::size_t i : cls) m |= span << i;
      masks.push_back(m);
      std::map<Symbol, std::vector<std::size_t>> by;
      for (std::size_t i : cls)
        if (i + len < n) by[s[i + len]].push_back(i);
      for (auto& [c, v] : by) next.push_back(std::move(v));
    }
    classes.swap(next);
  }
  return masks;
}

// drop masks that contain another mask; hitting the smaller one is stronger
std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> keep;
  for (Mask m : masks) {
    bool dominated = false;
    for (Mask k : keep)
      if ((k & m) == k) { dominated = true; break; }
    if (!dominated) keep.push_back(m);
  }
  return keep;
}

struct Search {
  const std::vector<Mask>& masks;
  std::size_t best;
  Mask best_set;
  std::uint64_t nodes = 0;
  std::optional<std::uint64_t> budget;
  bool aborted = false;

  // chosen: current set; k: its size
  void run(Mask chosen, std::size_t k) {
    if (aborted) return;
    if (budget && ++nodes > *budget) { aborted = true; return; }
    if (!budget) ++nodes;
    // the unhit constraint with fewest options
    const Mask* pick = nullptr;
    int pick_pop = 65;
    std::size_t unhit = 0;
    for (const Mask& m : masks) {
      if (m & chosen) continue;
      ++unhit;
      int pc = std::popcount(m);
      if (pc < pick_pop) pick_pop = pc, pick = &m;
    }
    if (!pick) {
      if (k < best) best = k, best_set = chosen;
      return;
    }
    if (k + 1 >= best) return;
    // disjoint unhit masks each need their own position
    {
      Mask used = 0;
      std::size_t need = 0;
      for (const Mask& m : masks) {
        if ((m & chosen) || (m & used)) continue;
        used |= m;
        ++need;
      }
      if (k + need >= best) return;
    }
    Mask opts = *pick;
    while (opts) {
      int b = std::countr_zero(opts);
      opts &= opts - 1;
      run(chosen | (Mask(1) << b), k + 1);
      if (aborted) return;
    }
  }
};

}  // namespace

bool is_attractor(const Text& t, const Positions& gamma) {
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  for (std::size_t p : gamma)
    if (p < 1 || p > n) throw Error("attractor position out of range");
  std::vector<char> in(n + 2, 0);
  for (std::size_t p : gamma) in[p] = 1;
  // prefix counts of chosen positions, 1-based
  std::vector<std::size_t> pre(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) pre[i] = pre[i - 1] + in[i];
  std::map<std::vector<Symbol>, bool> seen;
  for (std::size_t len = 1; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::vector<Symbol> key(s.begin() + std::ptrdiff_t(i), s.begin() + std::ptrdiff_t(i + len));
      bool hit = pre[i + len] - pre[i] > 0;
      auto [it, fresh] = seen.try_emplace(std::move(key), hit);
      if (!fresh && hit) it->second = true;
    }
  for (auto& [k, hit] : seen)
    if (!hit) return false;
  return true;
}

GammaResult gamma_exact(const Text& t, std::optional<std::uint64_t> budget, std::size_t max_n) {
  require_nonempty(t, "gamma_exact");
  const std::size_t n = t.size();
  if (n > max_n || n > 64)
    throw Error("gamma_exact: n = " + std::to_string(n) + " exceeds limit " + std::to_string(std::min<std::size_t>(max_n, 64)));
  auto masks = minimal_masks(occurrence_masks(t.symbols()));

  // incumbent: last position of every LZSSsr factor (checked, not assumed)
  Mask inc = 0;
  for (const auto& f : lzsssr(t).factors) inc |= Mask(1) << (f.start + f.len - 2);
  bool inc_ok = std::all_of(masks.begin(), masks.end(), [&](Mask m) { return (m & inc) != 0; });
  if (!inc_ok) inc = n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1;

  Search s{masks, std::size_t(std::popcount(inc)), inc, 0, budget, false};
  s.run(0, 0);
  GammaResult r;
  r.conclusive = !s.aborted;
  r.gamma = s.best;
  r.nodes = s.nodes;
  for (std::size_t i = 0; i < n; ++i)
    if (s.best_set >> i & 1) r.witness.push_back(i + 1);
  return r;
}

}  // namespace repsense
