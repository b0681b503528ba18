#include "repsense/gcis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace repsense {

namespace {

template <class V>
void types_of(const V& g, std::vector<LsType>& t) {
  const std::size_t m = g.size();
  t.assign(m + 1, LsType::S);
  for (std::size_t i = m; i-- > 0;) {
    if (i + 1 == m)
      t[i] = LsType::L;  // anything is larger than $
    else if (g[i] < g[i + 1])
      t[i] = LsType::S;
    else if (g[i] > g[i + 1])
      t[i] = LsType::L;
    else
      t[i] = t[i + 1];
  }
}

// 0-based cut points in G$, including 0 and m
template <class V>
void cuts_of(const V& g, std::vector<LsType>& t, std::vector<std::size_t>& cuts) {
  types_of(g, t);
  const std::size_t m = g.size();
  cuts.clear();
  cuts.push_back(0);
  for (std::size_t i = 1; i < m; ++i)
    if (t[i] == LsType::S && t[i - 1] == LsType::L) cuts.push_back(i);
  cuts.push_back(m);
}

// one level of parsing; returns false when there is no interior LMS position
bool parse_level(const std::vector<std::int64_t>& g, std::int64_t first_label, GcisLevel* keep,
                 std::vector<std::int64_t>& next, std::size_t& dict_len, std::size_t& dict_count) {
  static thread_local std::vector<LsType> t;
  static thread_local std::vector<std::size_t> cuts;
  cuts_of(g, t, cuts);
  if (cuts.size() <= 2) return false;
  const std::size_t z = cuts.size() - 1;
  std::vector<std::size_t> order(z);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(g.begin() + std::ptrdiff_t(cuts[a]), g.begin() + std::ptrdiff_t(cuts[a + 1]),
                                        g.begin() + std::ptrdiff_t(cuts[b]), g.begin() + std::ptrdiff_t(cuts[b + 1]));
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<std::int64_t> rank(z);
  std::int64_t r = -1;
  dict_len = 0;
  for (std::size_t k = 0; k < z; ++k) {
    std::size_t j = order[k];
    if (k == 0 || less(order[k - 1], j)) {
      ++r;
      dict_len += cuts[j + 1] - cuts[j];
      if (keep) {
        keep->dict.emplace_back(g.begin() + std::ptrdiff_t(cuts[j]), g.begin() + std::ptrdiff_t(cuts[j + 1]));
        keep->labels.push_back(first_label + r);
      }
    }
    rank[j] = r;
  }
  dict_count = std::size_t(r + 1);
  next.resize(z);
  for (std::size_t j = 0; j < z; ++j) next[j] = first_label + rank[j];
  if (keep) keep->parsed = next;
  return true;
}

GcisGrammar build(const Text& text, bool keep_levels) {
  require_nonempty(text, "gcis");
  GcisGrammar gr;
  gr.input.assign(text.begin(), text.end());
  gr.sigma = std::int64_t(text.alphabet().size()) + 1;
  std::vector<std::int64_t> cur = gr.input, next;
  std::int64_t rules_so_far = 0;
  std::size_t total = 0;
  while (true) {
    GcisLevel lvl;
    std::size_t dict_len = 0, dict_count = 0;
    if (!parse_level(cur, rules_so_far + gr.sigma + 1, keep_levels ? &lvl : nullptr, next, dict_len, dict_count))
      break;
    total += dict_len;
    rules_so_far += std::int64_t(dict_count);
    if (keep_levels) gr.levels.push_back(std::move(lvl));
    else gr.levels.emplace_back();
    cur.swap(next);
  }
  gr.size = total + cur.size();
  return gr;
}

}  // namespace

std::vector<LsType> classify_ls(const Text& s) {
  std::vector<LsType> t;
  types_of(s.symbols(), t);
  return t;
}

std::vector<std::size_t> lms_positions(const Text& s) {
  std::vector<LsType> t;
  std::vector<std::size_t> cuts;
  cuts_of(s.symbols(), t, cuts);
  for (auto& c : cuts) ++c;
  return cuts;
}

std::size_t GcisLevel::dict_length() const {
  std::size_t s = 0;
  for (const auto& d : dict) s += d.size();
  return s;
}

GcisGrammar gcis_build(const Text& t) { return build(t, true); }

std::size_t g_is(const Text& t) { return build(t, false).size; }

std::string GcisGrammar::dump() const {
  auto seq = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::string out = "G0 = " + seq(input) + "\n";
  for (std::size_t h = 0; h < levels.size(); ++h) {
    const auto& l = levels[h];
    out += "D" + std::to_string(h + 1) + " (" + std::to_string(l.dict_length()) + ") =";
    for (std::size_t k = 0; k < l.dict.size(); ++k) out += " " + std::to_string(l.labels[k]) + ":" + seq(l.dict[k]);
    out += "\nG" + std::to_string(h + 1) + " = " + seq(l.parsed) + "\n";
  }
  out += "g_is = " + std::to_string(size) + "\n";
  return out;
}

Slp GcisGrammar::to_slp() const {
  Slp g;
  std::map<std::int64_t, std::size_t> rule_of;  // label -> rule index
  for (std::size_t h = 0; h < levels.size(); ++h) {
    const auto& l = levels[h];
    for (std::size_t k = 0; k < l.dict.size(); ++k) {
      std::vector<GSym> rhs;
      for (std::int64_t x : l.dict[k])
        rhs.push_back(h == 0 ? GSym::term(Symbol(x)) : GSym::rule(rule_of.at(x)));
      rule_of[l.labels[k]] = g.rules.size();
      g.rules.push_back(std::move(rhs));
    }
  }
  std::vector<GSym> top;
  for (std::int64_t x : final_string()) top.push_back(levels.empty() ? GSym::term(Symbol(x)) : GSym::rule(rule_of.at(x)));
  g.rules.push_back(std::move(top));
  g.start = g.rules.size() - 1;
  return g;
}

}  // namespace repsense
