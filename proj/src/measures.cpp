#include "repsense/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "repsense/attractor.hpp"
#include "repsense/bidirectional.hpp"
#include "repsense/bwt.hpp"
#include "repsense/cdawg.hpp"
#include "repsense/delta.hpp"
#include "repsense/gcis.hpp"
#include "repsense/lz.hpp"
#include "repsense/slp.hpp"

namespace repsense {

namespace {

std::uint64_t parse_count(std::string_view v, std::string_view key) {
  // accepts plain integers and the 1e7 shorthand
  auto e = v.find_first_of("eE");
  std::uint64_t mant = 0, ex = 0;
  auto bad = [&] { return Error("REPSENSE_LIMITS: bad value for " + std::string(key) + ": " + std::string(v)); };
  auto head = v.substr(0, e);
  if (std::from_chars(head.data(), head.data() + head.size(), mant).ec != std::errc{}) throw bad();
  if (e != std::string_view::npos) {
    auto tail = v.substr(e + 1);
    if (std::from_chars(tail.data(), tail.data() + tail.size(), ex).ec != std::errc{} || ex > 18) throw bad();
    while (ex--) mant *= 10;
  }
  return mant;
}

}  // namespace

Limits Limits::parse(std::string_view spec, Limits base) {
  Limits l = base;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("REPSENSE_LIMITS: expected key=value, got " + std::string(item));
    auto key = item.substr(0, eq), val = item.substr(eq + 1);
    auto x = parse_count(val, key);
    if (key == "gamma") l.gamma_max_n = x;
    else if (key == "b") l.b_max_n = x;
    else if (key == "e") l.e_max_n = x;
    else if (key == "gamma_budget") l.gamma_budget = x ? std::optional<std::uint64_t>(x) : std::nullopt;
    else if (key == "b_budget") l.b_budget = x ? std::optional<std::uint64_t>(x) : std::nullopt;
    else throw Error("REPSENSE_LIMITS: unknown key " + std::string(key));
    if (x == 0 && (key == "gamma" || key == "b" || key == "e")) throw Error("REPSENSE_LIMITS: limits must be >= 1");
  }
  return l;
}

Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

Limits Limits::from_env() {
  const char* s = std::getenv("REPSENSE_LIMITS");
  return s ? parse(s) : Limits{};
}

std::string Limits::str() const {
  std::ostringstream o;
  o << "gamma=" << gamma_max_n << ",b=" << b_max_n << ",e=" << e_max_n
    << ",gamma_budget=" << (gamma_budget ? *gamma_budget : 0) << ",b_budget=" << (b_budget ? *b_budget : 0);
  return o.str();
}

const std::vector<MeasureInfo>& measures() {
  static const std::vector<MeasureInfo> v = {
      {"delta", "substring complexity", true, CostClass::Quadratic, true},
      {"gamma", "smallest string attractor", true, CostClass::Exponential, false},
      {"r", "runs in the rotation BWT", false, CostClass::Linear, true},
      {"b", "smallest bidirectional scheme", true, CostClass::Exponential, false},
      {"z77", "LZ77, non self-referencing", true, CostClass::Quadratic, true},
      {"z77sr", "LZ77, self-referencing", true, CostClass::Quadratic, true},
      {"zss", "LZSS, non self-referencing", true, CostClass::Quadratic, true},
      {"zsssr", "LZSS, self-referencing", true, CostClass::Quadratic, true},
      {"z78", "LZ78", true, CostClass::Linear, true},
      {"zend", "LZ-End", true, CostClass::Quadratic, true},
      {"gis", "GCIS grammar size", false, CostClass::Linear, true},
      {"gbsc", "bisection grammar size", true, CostClass::Linear, true},
      {"gbsc-nodes", "distinct internal nodes of the bisection tree", true, CostClass::Linear, true},
      {"e", "CDAWG edges", true, CostClass::Quadratic, true},
  };
  return v;
}

std::vector<std::string> suggest(std::string_view name, const std::vector<std::string>& pool) {
  auto dist = [](std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      cur[0] = i;
      for (std::size_t j = 1; j <= b.size(); ++j)
        cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
      std::swap(prev, cur);
    }
    return prev[b.size()];
  };
  std::vector<std::pair<std::size_t, std::string>> d;
  for (auto& p : pool) d.emplace_back(dist(name, p), p);
  std::stable_sort(d.begin(), d.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (auto& [k, s] : d)
    if (out.size() < 3 && k <= std::max<std::size_t>(2, name.size() / 2)) out.push_back(s);
  return out;
}

const MeasureInfo& measure_info(std::string_view id) {
  for (auto& m : measures())
    if (m.id == id) return m;
  std::vector<std::string> names;
  for (auto& m : measures()) names.push_back(m.id);
  std::string msg = "unknown measure '" + std::string(id) + "'";
  auto s = suggest(id, names);
  if (!s.empty()) {
    msg += "; did you mean";
    for (auto& x : s) msg += " " + x;
    msg += "?";
  }
  msg += " (known:";
  for (auto& x : names) msg += " " + x;
  msg += ")";
  throw Error(msg);
}

MeasureValue evaluate(std::string_view id, const Text& t, const Limits& lim) {
  const auto& info = measure_info(id);
  require_nonempty(t, "evaluate");
  auto n = [](std::size_t x) { return Rational(std::int64_t(x)); };
  const std::string& m = info.id;
  if (m == "delta") return {delta(t)};
  if (m == "r") return {n(bwt_runs(t))};
  if (m == "z77") return {n(lz_size(t, LzVariant::LZ77))};
  if (m == "z77sr") return {n(lz_size(t, LzVariant::LZ77sr))};
  if (m == "zss") return {n(lz_size(t, LzVariant::LZSS))};
  if (m == "zsssr") return {n(lz_size(t, LzVariant::LZSSsr))};
  if (m == "z78") return {n(lz_size(t, LzVariant::LZ78))};
  if (m == "zend") return {n(lz_size(t, LzVariant::LZEnd))};
  if (m == "gis") return {n(g_is(t))};
  if (m == "gbsc") return {n(g_bsc(t))};
  if (m == "gbsc-nodes") return {n(bisection_internal_nodes(t))};
  if (m == "e") {
    if (t.size() > lim.e_max_n) return {0, false};
    return {n(cdawg_e(t, lim.e_max_n))};
  }
  if (m == "gamma") {
    if (t.size() > lim.gamma_max_n || t.size() > 64) return {n(lz_size(t, LzVariant::LZSSsr)), false};
    auto g = gamma_exact(t, lim.gamma_budget, lim.gamma_max_n);
    return {n(g.gamma), g.conclusive};
  }
  if (m == "b") {
    if (t.size() > lim.b_max_n) return {n(lz_size(t, LzVariant::LZSSsr)), false};
    auto b = b_exact(t, lim.b_max_n, lim.b_budget);
    return {n(b.b), b.conclusive};
  }
  throw Error("measure without an evaluator: " + m);
}

}  // namespace repsense
