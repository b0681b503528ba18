#include "repsense/delta.hpp"

#include "repsense/families.hpp"
#include "suffix.hpp"

namespace repsense {

SubstrTable substr_table(const Text& t) {
  require_nonempty(t, "substr_table");
  const auto& s = t.symbols();
  const std::size_t n = s.size();
  auto sa = detail::suffix_array(s);
  auto lcp = detail::lcp_array(s, sa);
  // suffix sa[i] adds new substrings of lengths lcp[i]+1 .. n-sa[i]
  std::vector<std::int64_t> d(n + 2, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[lcp[i] + 1] += 1;
    d[n - sa[i] + 1] -= 1;
  }
  SubstrTable out;
  out.counts.resize(n);
  std::int64_t run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    run += d[k];
    out.counts[k - 1] = run;
    Rational r(run, std::int64_t(k));
    if (k == 1 || r > out.delta) out.delta = r, out.argmax_k = k;
  }
  return out;
}

Rational delta(const Text& t) { return substr_table(t).delta; }

DeltaFamilyCheck delta_family_check(int m) {
  if (m < 1) throw Error("delta family needs m >= 1");
  auto inst = families::generate("delta-del", {{"m", m}});
  DeltaFamilyCheck c;
  c.m = m;
  c.delta_t = delta(inst.t);
  c.delta_t_edited = delta(inst.t_edited());
  c.bound = Rational(9 * m + 2, 3 * m + 1);
  c.ok = c.delta_t == Rational(2) && c.delta_t_edited >= c.bound;
  return c;
}

}  // namespace repsense
