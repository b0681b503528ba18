#include "repsense/slp.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace repsense {

std::size_t Slp::size() const {
  std::size_t s = 0;
  for (const auto& r : rules) s += r.size();
  return s;
}

namespace {

// topological order, children first; throws on cycles
std::vector<std::size_t> topo_order(const Slp& g) {
  const std::size_t m = g.rules.size();
  std::vector<char> state(m, 0);
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t r0 = 0; r0 < m; ++r0) {
    if (state[r0]) continue;
    stack.emplace_back(r0, 0);
    state[r0] = 1;
    while (!stack.empty()) {
      auto& [r, k] = stack.back();
      if (k < g.rules[r].size()) {
        GSym s = g.rules[r][k++];
        if (!s.nt) continue;
        if (s.v < 0 || std::size_t(s.v) >= m) throw Error("slp: dangling nonterminal");
        if (state[std::size_t(s.v)] == 1) throw Error("slp: cyclic rules");
        if (state[std::size_t(s.v)] == 0) {
          state[std::size_t(s.v)] = 1;
          stack.emplace_back(std::size_t(s.v), 0);
        }
      } else {
        state[r] = 2;
        order.push_back(r);
        stack.pop_back();
      }
    }
  }
  return order;
}

}  // namespace

std::size_t Slp::height() const {
  auto order = topo_order(*this);
  std::vector<std::size_t> h(rules.size(), 0);
  for (std::size_t r : order) {
    std::size_t best = 0;
    for (GSym s : rules[r]) best = std::max(best, s.nt ? h[std::size_t(s.v)] : 0);
    h[r] = best + 1;
  }
  return rules.empty() ? 0 : h[start];
}

std::string Slp::dump() const {
  std::string out;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    out += "X" + std::to_string(r + 1) + (r == start ? "*" : "") + " ->";
    for (GSym s : rules[r]) out += s.nt ? " X" + std::to_string(s.v + 1) : " " + std::to_string(s.v);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> expansion_lengths(const Slp& g) {
  auto order = topo_order(g);
  std::vector<std::size_t> len(g.rules.size(), 0);
  for (std::size_t r : order)
    for (GSym s : g.rules[r]) len[r] += s.nt ? len[std::size_t(s.v)] : 1;
  return len;
}

Text slp_expand(const Slp& g) {
  if (g.rules.empty()) return Text();
  if (g.start >= g.rules.size()) throw Error("slp: bad start rule");
  topo_order(g);
  std::vector<Symbol> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{g.start, 0}};
  while (!stack.empty()) {
    auto& [r, k] = stack.back();
    if (k == g.rules[r].size()) { stack.pop_back(); continue; }
    GSym s = g.rules[r][k++];
    if (s.nt)
      stack.emplace_back(std::size_t(s.v), 0);
    else
      out.push_back(s.v);
  }
  return Text(std::move(out));
}

Slp prune_unreachable(const Slp& g) {
  std::vector<std::int64_t> id(g.rules.size(), -1);
  std::vector<std::size_t> keep;
  std::vector<std::size_t> todo{g.start};
  id[g.start] = 0;
  keep.push_back(g.start);
  while (!todo.empty()) {
    std::size_t r = todo.back();
    todo.pop_back();
    for (GSym s : g.rules[r])
      if (s.nt && id[std::size_t(s.v)] < 0) {
        id[std::size_t(s.v)] = std::int64_t(keep.size());
        keep.push_back(std::size_t(s.v));
        todo.push_back(std::size_t(s.v));
      }
  }
  Slp out;
  out.start = 0;
  for (std::size_t r : keep) {
    auto rhs = g.rules[r];
    for (auto& s : rhs)
      if (s.nt) s.v = std::int32_t(id[std::size_t(s.v)]);
    out.rules.push_back(std::move(rhs));
  }
  return out;
}

namespace {

struct BisectionBuilder {
  const std::vector<Symbol>& s;
  Slp g;
  std::map<std::vector<Symbol>, std::size_t> seen;
  std::size_t binary = 0;

  std::size_t build(std::size_t from, std::size_t len) {
    std::vector<Symbol> key(s.begin() + std::ptrdiff_t(from), s.begin() + std::ptrdiff_t(from + len));
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    std::vector<GSym> rhs;
    if (len == 1) {
      rhs.push_back(GSym::term(s[from]));
    } else {
      std::size_t left = 1;
      while (left * 2 < len) left *= 2;
      rhs.push_back(GSym::rule(build(from, left)));
      rhs.push_back(GSym::rule(build(from + left, len - left)));
      ++binary;
    }
    g.rules.push_back(std::move(rhs));
    std::size_t id = g.rules.size() - 1;
    seen.emplace(std::move(key), id);
    return id;
  }
};

}  // namespace

Slp bisection(const Text& t) {
  require_nonempty(t, "bisection");
  BisectionBuilder b{t.symbols(), {}, {}, 0};
  b.g.start = b.build(0, t.size());
  return std::move(b.g);
}

std::size_t g_bsc(const Text& t) { return bisection(t).size(); }

std::size_t bisection_internal_nodes(const Text& t) {
  require_nonempty(t, "bisection");
  BisectionBuilder b{t.symbols(), {}, {}, 0};
  b.build(0, t.size());
  return b.binary;
}

Slp splice_grammar(const Slp& g, const EditOp& e) {
  auto len = expansion_lengths(g);
  const std::size_t n = g.rules.empty() ? 0 : len[g.start];
  {
    Text dummy(std::vector<Symbol>(n, 0));
    // validity only depends on positions, except the identical-symbol check below
    if (e.kind == EditKind::Sub ? (e.pos < 1 || e.pos > n) : !edit_valid(dummy, e))
      throw Error("splice_grammar: invalid edit " + e.str());
  }
  Slp out = g;
  // insertion after the last symbol is handled as "after leaf n"
  const bool append = e.kind == EditKind::Ins && e.pos == n + 1;
  std::size_t target = append ? n : e.pos;  // 1-based leaf
  if (n == 0) {
    // empty grammar text: only an insertion at 1 is possible
    out.rules.push_back({GSym::term(e.sym)});
    out.start = out.rules.size() - 1;
    return prune_unreachable(out);
  }

  // copy rule r with the leaf at offset `off` (1-based within r's expansion) edited;
  // returns the new rule id, or SIZE_MAX if the copy became empty
  std::function<std::size_t(std::size_t, std::size_t)> edit = [&](std::size_t r, std::size_t off) -> std::size_t {
    std::vector<GSym> rhs = g.rules[r];
    std::size_t acc = 0;
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      std::size_t l = rhs[k].nt ? len[std::size_t(rhs[k].v)] : 1;
      if (off > acc + l) { acc += l; continue; }
      std::size_t inner = off - acc;
      if (rhs[k].nt) {
        std::size_t child = edit(std::size_t(rhs[k].v), inner);
        if (child == SIZE_MAX)
          rhs.erase(rhs.begin() + std::ptrdiff_t(k));
        else
          rhs[k] = GSym::rule(child);
      } else {
        switch (e.kind) {
          case EditKind::Sub:
            if (rhs[k].v == e.sym) throw Error("splice_grammar: substitution by the same symbol");
            rhs[k] = GSym::term(e.sym);
            break;
          case EditKind::Ins:
            rhs.insert(rhs.begin() + std::ptrdiff_t(append ? k + 1 : k), GSym::term(e.sym));
            break;
          case EditKind::Del:
            rhs.erase(rhs.begin() + std::ptrdiff_t(k));
            break;
        }
      }
      break;
    }
    if (rhs.empty()) return SIZE_MAX;
    out.rules.push_back(std::move(rhs));
    return out.rules.size() - 1;
  };
  std::size_t root = edit(g.start, target);
  if (root == SIZE_MAX) {
    out.rules.push_back({});
    root = out.rules.size() - 1;
  }
  out.start = root;
  return prune_unreachable(out);
}

}  // namespace repsense
