#include "repsense/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace repsense {

SensitivityReport sensitivity(const std::string& measure, const Text& t, EditKind kind, const AlphabetPolicy& policy,
                              const Limits& lim) {
  require_nonempty(t, "sensitivity");
  SensitivityReport rep;
  rep.measure = measure_info(measure).id;
  rep.t = t;
  rep.kind = kind;
  rep.policy = policy.str();
  rep.base = evaluate(measure, t, lim);
  if (rep.base.value <= Rational(0)) throw Error("sensitivity: C(T) must be positive");

  std::set<std::vector<Symbol>> seen;
  bool first = true;
  for (const auto& e : enumerate_edits(t, kind, policy)) {
    Text te = apply_edit(t, e);
    if (te.empty()) continue;  // deleting the only symbol
    if (!seen.insert(te.symbols()).second) continue;
    EditResult r;
    r.edit = e;
    r.value = evaluate(measure, te, lim);
    r.ratio = r.value.value / rep.base.value;
    if (!r.value.conclusive) {
      ++rep.unknown;
    } else {
      Rational d = r.value.value - rep.base.value;
      if (first || r.ratio > rep.ms) rep.ms = r.ratio, rep.ms_witness = e;
      if (first || d > rep.as) rep.as = d, rep.as_witness = e;
      first = false;
    }
    rep.results.push_back(r);
  }
  return rep;
}

std::vector<Text> all_strings(std::size_t n, int sigma, bool canonical) {
  if (sigma < 1) throw Error("all_strings: sigma >= 1");
  std::vector<Text> out;
  std::vector<Symbol> cur(n, 0);
  // odometer; in canonical mode a digit may exceed the running max by at most one
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      Symbol cap = Symbol(sigma - 1);
      if (canonical) {
        Symbol mx = -1;
        for (std::size_t j = 0; j < i; ++j) mx = std::max(mx, cur[j]);
        cap = std::min<Symbol>(cap, mx + 1);
      }
      if (cur[i] < cap) {
        ++cur[i];
        std::fill(cur.begin() + std::ptrdiff_t(i) + 1, cur.end(), 0);
        goto next;
      }
    }
    break;
  next:;
  }
  return out;
}

std::vector<Symbol> sweep_symbols(const Text& t, int sigma, bool canonical, bool fresh) {
  std::vector<Symbol> a;
  if (canonical) {
    // symbols outside T are interchangeable; one representative is enough
    Symbol k = Symbol(t.alphabet().size());
    Symbol top = (k < sigma || fresh) ? k : k - 1;
    for (Symbol c = 0; c <= top; ++c) a.push_back(c);
  } else {
    for (Symbol c = 0; c < sigma; ++c) a.push_back(c);
    if (fresh) a.push_back(Symbol(sigma));
  }
  return a;
}

namespace {

std::vector<EditOp> sweep_edits(const Text& t, EditKind kind, const std::vector<Symbol>& syms) {
  return enumerate_edits(t, kind, AlphabetPolicy::fixed(syms));
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (!fn(0, i)) return;
    return;
  }
  std::atomic<bool> stop{false};
  std::vector<std::thread> th;
  for (int w = 0; w < jobs; ++w)
    th.emplace_back([&, w] {
      for (std::size_t i = std::size_t(w); i < count && !stop; i += std::size_t(jobs))
        if (!fn(w, i)) stop = true;
    });
  for (auto& x : th) x.join();
}

}  // namespace

std::size_t sweep(const std::string& measure, std::size_t n, int sigma, EditKind kind, const SweepOptions& opt,
                  const std::function<bool(const SweepCase&)>& visit) {
  const auto& info = measure_info(measure);
  const bool canon = opt.use_canonical && info.order_insensitive;
  auto strings = all_strings(n, sigma, canon);
  std::atomic<std::size_t> visited{0};
  parallel_for(strings.size(), opt.jobs, [&](int, std::size_t i) {
    const Text& t = strings[i];
    MeasureValue base = evaluate(info.id, t, opt.limits);
    std::set<std::vector<Symbol>> seen;
    for (const auto& e : sweep_edits(t, kind, sweep_symbols(t, sigma, canon, opt.fresh))) {
      Text te = apply_edit(t, e);
      if (te.empty()) continue;
      if (!seen.insert(canon ? canonicalize(te).symbols() : te.symbols()).second) continue;
      MeasureValue v = evaluate(info.id, te, opt.limits);
      if (!visit(SweepCase{t, base, e, te, v})) return false;
    }
    ++visited;
    return true;
  });
  return visited;
}

GlobalWorst global_worst(const std::string& measure, std::size_t n, int sigma, EditKind kind, const SweepOptions& opt) {
  const auto& info = measure_info(measure);
  const bool canon = opt.use_canonical && info.order_insensitive;
  auto strings = all_strings(n, sigma, canon);
  struct Best {
    bool set = false;
    Rational v, base;
    std::size_t idx = 0;
    EditOp e;
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<Best> bms(jobs), bas(jobs);
  std::vector<std::size_t> unknown(jobs, 0);
  auto better = [](const Best& cur, const Rational& v, std::size_t idx) {
    return !cur.set || v > cur.v || (v == cur.v && idx < cur.idx);
  };
  parallel_for(strings.size(), jobs, [&](int w, std::size_t i) {
    const Text& t = strings[i];
    MeasureValue base = evaluate(info.id, t, opt.limits);
    if (!base.conclusive) {
      ++unknown[w];
      return true;
    }
    std::set<std::vector<Symbol>> seen;
    for (const auto& e : sweep_edits(t, kind, sweep_symbols(t, sigma, canon, opt.fresh))) {
      Text te = apply_edit(t, e);
      if (te.empty()) continue;
      if (!seen.insert(canon ? canonicalize(te).symbols() : te.symbols()).second) continue;
      MeasureValue v = evaluate(info.id, te, opt.limits);
      if (!v.conclusive) {
        ++unknown[w];
        continue;
      }
      Rational ms = v.value / base.value, as = v.value - base.value;
      // strict improvement keeps the earliest edit of the earliest string
      if (!bms[w].set || ms > bms[w].v) bms[w] = {true, ms, base.value, i, e};
      if (!bas[w].set || as > bas[w].v) bas[w] = {true, as, base.value, i, e};
    }
    return true;
  });
  GlobalWorst g;
  g.measure = info.id;
  g.n = n;
  g.sigma = sigma;
  g.kind = kind;
  g.strings = strings.size();
  Best ms, as;
  for (int w = 0; w < jobs; ++w) {
    if (bms[w].set && better(ms, bms[w].v, bms[w].idx)) ms = bms[w];
    if (bas[w].set && better(as, bas[w].v, bas[w].idx)) as = bas[w];
    g.unknown += unknown[w];
  }
  if (ms.set) g.ms = ms.v, g.ms_text = strings[ms.idx], g.ms_edit = ms.e, g.ms_base = ms.base;
  if (as.set) g.as = as.v, g.as_text = strings[as.idx], g.as_edit = as.e, g.as_base = as.base;
  return g;
}

}  // namespace repsense
