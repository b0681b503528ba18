#include "repsense/cdawg.hpp"

#include <algorithm>

#include "suffix.hpp"

namespace repsense {

std::size_t MaximalRepeatSet::e() const {
  std::size_t e = source_edges.size();
  for (const auto& r : repeats) e += r.extensions.size();
  return e;
}

MaximalRepeatSet maximal_repeats(const Text& t, std::size_t max_n) {
  require_nonempty(t, "cdawg_e");
  if (t.size() > max_n)
    throw Error("cdawg_e: n = " + std::to_string(t.size()) + " exceeds limit " + std::to_string(max_n));
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  auto sa = detail::suffix_array(s);
  auto lcp = detail::lcp_array(s, sa);

  MaximalRepeatSet out;
  out.source_edges = t.alphabet();

  // lcp-intervals are exactly the right-maximal repeats
  struct Open { std::size_t len, lb; };
  std::vector<Open> st{{0, 0}};
  auto report = [&](std::size_t len, std::size_t lb, std::size_t rb) {
    bool left_max = false;
    Symbol first_left = -2;
    std::vector<Symbol> ext;
    std::size_t leftmost = n;
    for (std::size_t k = lb; k <= rb; ++k) {
      std::size_t p = std::size_t(sa[k]);
      Symbol left = p == 0 ? -1 : s[p - 1];  // -1: text start, unique
      if (k == lb)
        first_left = left;
      else if (left != first_left || left == -1)
        left_max = true;
      if (p + len < n) ext.push_back(s[p + len]);
      leftmost = std::min(leftmost, p);
    }
    if (!left_max) return;
    std::sort(ext.begin(), ext.end());
    ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
    out.repeats.push_back({leftmost + 1, len, std::move(ext)});
  };
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t cur = i < n ? std::size_t(lcp[i]) : 0;
    std::size_t lb = i - 1;
    while (cur < st.back().len) {
      Open o = st.back();
      st.pop_back();
      report(o.len, o.lb, i - 1);
      lb = o.lb;
    }
    if (cur > st.back().len) st.push_back({cur, lb});
  }
  std::sort(out.repeats.begin(), out.repeats.end(),
            [](const MaximalRepeat& a, const MaximalRepeat& b) { return a.len != b.len ? a.len < b.len : a.pos < b.pos; });
  return out;
}

std::size_t cdawg_e(const Text& t, std::size_t max_n) { return maximal_repeats(t, max_n).e(); }

}  // namespace repsense
